"""The # product on the integer span of Catalan alternative tableaux.

``C1 # C2`` lives on the concatenated shape.  An embedding strategy decides
where the cells of the two factors land; those cells keep their content
(dot or empty) and every other cell is free.  The product is the sum of all
valid fillings of the free cells.

Strategies
----------
``identity`` (default)
    Both factors keep their own steps: C1 on steps 1..m1, C2 on steps
    m1+1..m1+m2.  The free cells form the rectangle of C1's rows against
    C2's columns.  Because validity survives restriction to step intervals,
    ``C1 # C2`` is exactly the set of valid tableaux whose prefix is C1 and
    whose suffix is C2, which makes the product associative.
``shift``
    C2's columns keep their steps but its j-th row is moved to the j-th
    row-step of the whole word.  Kept for comparison; it is not associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .errors import InvalidArgument
from .formal import FormalSum
from .tableaux import EMPTY_TABLEAU, Cell, Tableau, all_shapes, cells, completions, enumerate_tableaux

RowMap = Callable[[tuple[int, ...], int, tuple[int, ...]], dict[int, int]]


def _identity_rows(shape2, offset, combined):
    return {i: i + offset for i, s in enumerate(shape2, 1) if s == 1}


def _shift_rows(shape2, offset, combined):
    targets = [i for i, s in enumerate(combined, 1) if s == 1]
    mine = [i for i, s in enumerate(shape2, 1) if s == 1]
    return dict(zip(mine, targets))


STRATEGIES: dict[str, RowMap] = {"identity": _identity_rows, "shift": _shift_rows}
DEFAULT_STRATEGY = "identity"


@dataclass(frozen=True)
class Embedding:
    """Placement of two factors inside a combined shape.

    ``fixed`` maps image cells to their content (``"R"``, ``"B"`` or
    ``None`` for a forced empty cell); ``free`` holds every other cell.
    """

    combined_shape: tuple[int, ...]
    fixed: dict[Cell, str | None]
    free: frozenset[Cell]


def embed(
    c1: Tableau,
    c2: Tableau,
    strategy: str = DEFAULT_STRATEGY,
    connector: Iterable[int] = (),
) -> Embedding:
    """Lay out ``c1`` then ``connector`` steps then ``c2``.

    The # product uses no connector; a single +1 or -1 connector gives the
    two block shapes that appear in the Loday-Ronco product.
    """
    try:
        row_map = STRATEGIES[strategy]
    except KeyError:
        raise InvalidArgument(f"unknown strategy {strategy!r}") from None
    connector = tuple(connector)
    combined = c1.shape + connector + c2.shape
    offset = c1.size + len(connector)
    fixed: dict[Cell, str | None] = {cell: None for cell in cells(c1.shape)}
    fixed.update(c1.dot_map)
    rows = row_map(c2.shape, offset, combined)
    dots2 = c2.dot_map
    for (r, c) in cells(c2.shape):
        fixed[(rows[r], c + offset)] = dots2.get((r, c))
    free = cells(combined) - set(fixed)
    return Embedding(combined, fixed, frozenset(free))


def hash_product(
    c1: Tableau, c2: Tableau, strategy: str = DEFAULT_STRATEGY
) -> FormalSum[Tableau]:
    e = embed(c1, c2, strategy)
    terms = list(completions(e.combined_shape, e.fixed))
    assert len(set(terms)) == len(terms)
    return FormalSum.from_basis(terms)


def hash_product_sum(
    s1: FormalSum[Tableau], s2: FormalSum[Tableau], strategy: str = DEFAULT_STRATEGY
) -> FormalSum[Tableau]:
    return s1.map_bilinear(s2, lambda a, b: hash_product(a, b, strategy))


UNIT = EMPTY_TABLEAU


def tableaux_up_to(m: int) -> dict[int, list[Tableau]]:
    return {k: [t for s in all_shapes(k) for t in enumerate_tableaux(s)] for k in range(m + 1)}


def associativity_failures(max_total: int, strategy: str, limit: int | None = None):
    """Yield triples (C1, C2, C3), total size <= ``max_total``, where
    ``(C1 # C2) # C3`` and ``C1 # (C2 # C3)`` differ."""
    by_size = tableaux_up_to(max_total)
    cache: dict = {}

    def mul(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = hash_product(a, b, strategy)
        return cache[key]

    found = 0
    for m1, m2, m3 in product(range(max_total + 1), repeat=3):
        if m1 + m2 + m3 > max_total:
            continue
        for a in by_size[m1]:
            for b in by_size[m2]:
                ab = mul(a, b)
                for c in by_size[m3]:
                    left = ab.map_bilinear(FormalSum.from_basis([c]), mul)
                    right = FormalSum.from_basis([a]).map_bilinear(mul(b, c), mul)
                    if left != right:
                        yield (a, b, c), left, right
                        found += 1
                        if limit is not None and found >= limit:
                            return


def compare_strategies(max_total: int = 6, strategies: Iterable[str] = ("identity", "shift")) -> dict:
    """Associativity, unit and grading census for each embedding strategy."""
    by_size = tableaux_up_to(max_total)
    report = {"max_total_size": max_total, "strategies": {}}
    for name in strategies:
        failures = list(associativity_failures(max_total, name))
        unit_ok = all(
            hash_product(UNIT, t, name) == FormalSum.from_basis([t])
            and hash_product(t, UNIT, name) == FormalSum.from_basis([t])
            for ts in by_size.values()
            for t in ts
        )
        graded = all(
            term.size == a.size + b.size
            for m1 in range(max_total + 1)
            for m2 in range(max_total + 1 - m1)
            for a in by_size[m1]
            for b in by_size[m2]
            for term in hash_product(a, b, name)
        )
        first = None
        if failures:
            (a, b, c), left, right = failures[0]
            first = {
                "triple": [str(a), str(b), str(c)],
                "left_terms": len(left),
                "right_terms": len(right),
            }
        report["strategies"][name] = {
            "associativity_failures": len(failures),
            "associative": not failures,
            "unit": unit_ok,
            "graded": graded,
            "first_failure": first,
        }
    return report
