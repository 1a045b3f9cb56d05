"""
Permutations, increasing trees and canopies
===========================================

Multiply permutations, project them to binary trees, and look at fibers.
"""

from catalan_hopf import Permutation, canopy, enumerate_trees, fiber, mr_product, psi, standardize, updown

# Standardization keeps relative order only.
print(standardize([3, 2, 7, 5]))

# The product sums over every way of splitting the values between the factors.
p = mr_product(Permutation.parse("12"), Permutation.parse("213"))
print(f"12 * 213 = {p}  ({len(p)} terms)")

# Each permutation lands on the shape of its increasing tree.
for word in ("132", "213", "2143"):
    sigma = Permutation.parse(word)
    print(word, "->", psi(sigma), "up-down", updown(sigma))

# Fibers partition S_4, and each fiber has one Up-Down word: the canopy.
for t in enumerate_trees(4):
    z = sorted(fiber(t).perms)
    print(f"{str(t):>14}  canopy {canopy(t)}  fiber {' '.join(map(str, z))}")
