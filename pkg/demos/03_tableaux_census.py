"""
Catalan alternative tableaux
============================

Enumerate the tableaux of a shape and compare counts with tree canopies.
"""

from catalan_hopf.lab import shape_census
from catalan_hopf.perms import format_signs
from catalan_hopf.tableaux import enumerate_tableaux, render, transpose

shape = (1, -1, 1, -1)
for t in enumerate_tableaux(shape):
    print(t)
    print(render(t))
    print("transpose:", transpose(t))
    print()

# Per shape, tableaux and trees with that canopy come in equal numbers.
census = shape_census(5)
for s, (trees, tabs) in sorted(census.per_shape.items()):
    print(f"{format_signs(s)}  trees={trees:>2}  tableaux={tabs:>2}")
print("totals", census.totals)
