"""
The # product of tableaux
=========================

Place two tableaux on the concatenated shape and fill the free rectangle in
every valid way. Writes the embedding-strategy comparison to reports/.
"""

import json
import pathlib

from catalan_hopf.sharp import compare_strategies, embed, hash_product
from catalan_hopf.tableaux import Tableau, render

red = Tableau((1, -1), {(1, 2): "R"})
blue = Tableau((1, -1), {(1, 2): "B"})

e = embed(red, blue)
print("combined shape", e.combined_shape, "fixed", e.fixed, "free", sorted(e.free))
for t in hash_product(red, blue):
    print(t)
    print(render(t))

print(hash_product(Tableau((1,)), Tableau((-1,))))

report = compare_strategies(6)
out = pathlib.Path(__file__).resolve().parent.parent / "reports" / "hash_strategy_comparison.json"
out.parent.mkdir(exist_ok=True)
out.write_text(json.dumps(report, indent=2) + "\n")
print(json.dumps(report["strategies"], indent=2))
