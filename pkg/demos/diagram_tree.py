"""
The diagram tree and its leaves
===============================

Branches of the tree give homomorphisms of C_n into products of bicyclic and
cyclic monoids with a partially commutative Chinese quotient.  Leaves
index the minimal primes.
"""

from chinoid import diagrams, quotients, core

n = 4
for branch in diagrams.walk(n):
    pad = "  " * (len(branch.diagrams) - 1)
    tag = " leaf" if diagrams.is_leaf(branch.leaf) else ""
    print(pad + branch.leaf.render() + tag)

print([len(diagrams.enumerate_leaves(k)) for k in range(2, 9)])

# the image of a word under the branch ending in two nested arcs
branch = diagrams.leaf_for(4, "P3")
image = quotients.apply_branch(branch, core.parse_word("a3 a2 a4 a1"))
print(image.canonical().to_json())

# a3 a2 is central modulo that prime
for i in range(1, 5):
    print(i, quotients.congruent_mod(branch, (i, 3, 2), (3, 2, i)))

# every relation listed for the five primes holds in the kernel of its leaf
for check in diagrams.prime_catalog_check(4):
    print(check.name, check.checked, "relations", "ok" if check.passed else "FAILED")

# the worked example with fifteen generators
steps = [("arc", 10, 11), ("arc", 9, 12), ("dot", 8), ("dot", 7), ("dot", 6),
         ("arc", 5, 13), ("dot", 14), ("arc", 4, 15)]
print(diagrams.branch_from_steps(15, steps).leaf.render())
