"""
The Loday-Ronco product
=======================

Trees multiply by expanding their fibers, multiplying permutations and
regrouping. The result always consists of whole fibers.
"""

from catalan_hopf import canopy_split, enumerate_trees, lr_product, psi
from catalan_hopf.perms import Permutation, format_signs

single = enumerate_trees(1)[0]
t132 = psi(Permutation.parse("132"))

print(f"{single} * {t132} = {lr_product(single, t132)}")

# Every term's canopy is canopy(T1), then an up or a down, then canopy(T2).
for key, terms in sorted(canopy_split(psi(Permutation.parse("12")), single).items()):
    print(format_signs(key), "->", terms)

# The fast route reads the product off tree restrictions; both agree.
t1, t2 = enumerate_trees(3)[2], enumerate_trees(2)[0]
assert lr_product(t1, t2, "fast") == lr_product(t1, t2, "reference")
print(f"{t1} * {t2} has {len(lr_product(t1, t2))} terms")
