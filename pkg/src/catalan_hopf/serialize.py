"""JSON forms for every value type the CLI emits."""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .formal import FormalSum
from .perms import Permutation
from .tableaux import Tableau, tableau_from_json, tableau_to_json
from .trees import BinaryTree, decode_tree, tree_from_json, tree_to_json

# Keys used for the basis element inside a FormalSum term object.
_TERM_KEYS = {Permutation: "perm", BinaryTree: "tree", Tableau: "tableau"}


def _basis_to_json(x) -> Any:
    if isinstance(x, Permutation):
        return list(x)
    if isinstance(x, BinaryTree):
        return str(x)
    if isinstance(x, Tableau):
        return tableau_to_json(x)
    raise TypeError(f"no JSON form for {type(x).__name__}")


def sum_to_json(s: FormalSum) -> dict:
    terms = []
    for key, c in s.items():
        name = _TERM_KEYS[type(key)]
        terms.append({name: _basis_to_json(key), "coeff": c})
    return {"terms": terms}


def sum_from_json(obj: dict) -> FormalSum:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ParseError("expected an object with a 'terms' list")
    out = []
    for term in obj["terms"]:
        if "perm" in term:
            key = Permutation(term["perm"])
        elif "tree" in term:
            key = decode_tree(term["tree"])
        elif "tableau" in term:
            key = tableau_from_json(term["tableau"])
        else:
            raise ParseError(f"term without a basis element: {term!r}")
        out.append((key, int(term["coeff"])))
    return FormalSum(out)


def to_json(x) -> Any:
    """JSON-ready form of a permutation, tree, tableau or formal sum."""
    if isinstance(x, FormalSum):
        return sum_to_json(x)
    if isinstance(x, BinaryTree):
        return tree_to_json(x)
    return _basis_to_json(x)


def from_json(obj: Any, kind: str):
    """Inverse of :func:`to_json`; ``kind`` is perm, tree, tableau or sum."""
    if kind == "perm":
        return Permutation(obj)
    if kind == "tree":
        return tree_from_json(obj)
    if kind == "tableau":
        return tableau_from_json(obj)
    if kind == "sum":
        return sum_from_json(obj)
    raise ValueError(f"unknown kind {kind!r}")


def dumps(x, **kwargs) -> str:
    return json.dumps(to_json(x), ensure_ascii=False, **kwargs)


def loads(text: str, kind: str):
    return from_json(json.loads(text), kind)
