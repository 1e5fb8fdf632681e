"""
Canonical forms in the Chinese monoid
=====================================

Every element of C_n has exactly one staircase representative
b_1 b_2 ... b_n with b_i = (a_i a_1)^k_i1 ... (a_i a_{i-1})^k_i,i-1 a_i^k_ii.
"""

from chinoid import core

# the defining relations identify three words for each i <= j <= k
for w in core.relation_triples(1, 2, 3):
    print(core.format_word(w))

# a class, and the one staircase word in it
w = core.parse_word("a3 a1 a2 a2")
members = sorted(core.congruence_class(w, 3))
print(len(members), "words in the class of", core.format_word(w))
for m in members:
    print("  ", core.format_word(m), "<- staircase" if core.is_canonical_word(m, 3) else "")

x = core.normalize(w, 3)
print("exponent triangle:", x.k)

# the insertion fast path agrees with the closure on every short form
print("mismatches n=3 degree<=5:", len(core.validate_insertion(3, 5)))

# long products are cheap through insertion
long = core.parse_word("a4 a2 a3 a1 " * 6)
print(core.format_word(core.normalize_fast(long, 4).expand()))

# elements are not cancellative on the left in general, but a_n x a_1 = a_n a_1 w
print(core.format_word(core.left_divisor_shift_check(3, (2, 2))))
