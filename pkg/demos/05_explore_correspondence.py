"""
Searching for the tree-tableau correspondence
=============================================

How far do the product classes pin down a bijection between trees and
tableaux when the product is read as a block picture on tableaux?
"""

import json
import pathlib

from catalan_hopf.lab import explore_correspondence

reports = pathlib.Path(__file__).resolve().parent.parent / "reports"
reports.mkdir(exist_ok=True)
for strategy in ("identity", "shift"):
    r = explore_correspondence(6, strategy)
    print(f"{strategy}: {r.status}")
    for level in r.levels:
        print(f"  n={level['n']}: {level['partials_in']} -> {level['partials_out']} partial bijections,"
              f" {level['contradiction_count']} contradicting extensions")
    (reports / f"explore_{strategy}.json").write_text(json.dumps(r.to_json(), indent=2, ensure_ascii=False) + "\n")
