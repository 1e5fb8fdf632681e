"""
Monomial simple modules
=======================

V(lambda_1, ..., lambda_s) over C_{2s} has a basis indexed by s-tuples of
nonnegative integers; each generator moves a suffix of the indices.
"""

import random
from fractions import Fraction

from chinoid import reps

V = reps.standard_module(4, [Fraction(3, 2), -2])
print(V.describe())

e = reps.SparseVector.basis
print(reps.act(V, (3, 1), e((2, 1))))   # raises the first index by one
print(reps.verify_relations(V, 4).passed)

# a_4 a_1 and a_3 a_2 act by the parameters
print(reps.central_scalars(V, 4))

# any nonzero vector can be pushed to a multiple of e_(0,0)
rng = random.Random(reps.DEFAULT_SEED)
v = reps.random_vector(2, rng)
word, c = reps.cyclic_reach(V, v)
print(v, "->", reps.act(V, word, v), "via", word)

# building V(3, 5, 7) from the C_2 module Z by two extensions
U = reps.z_module(3)
for lam in (5, 7):
    U = reps.inductive_extend(U, lam)
print(U.actions == reps.standard_module(6, [3, 5, 7]).actions)

# the C_4 families and the prime each one sits over
for fam in reps.family_catalog(4):
    print(fam.id, "|", fam.constraint, "|", reps.FAMILY_PRIME[4].get(fam.id, "-"))
