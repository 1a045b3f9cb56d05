"""Catalan alternative tableaux.

A shape is a +1/-1 word of length m.  Position i (1-based) holding +1 is a
row-step, -1 a column-step, and the cell (i, j) exists when row-step i comes
before column-step j.  Dots are red ``"R"`` or blue ``"B"``.

Orientation (fixed here, checked by the census against tree canopies):

* a red dot at (r, c) shadows the cells of column c at *earlier* row-steps;
* a blue dot at (r, c) shadows the cells of row r at *later* column-steps.

A tableau is valid when no dot sits in a shadow and every empty cell lies in
some shadow.  Both shadows of a dot at (r, c) stay inside the step interval
[r, c], so restricting a valid tableau to any interval of steps keeps it
valid; the # product relies on this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidArgument, ParseError
from .perms import EMPTY_TEXT, format_signs, parse_signs, sign_word

RED = "R"
BLUE = "B"
COLORS = (RED, BLUE)
_SWAP = {RED: BLUE, BLUE: RED}

Cell = tuple[int, int]


def cells(shape: Sequence[int]) -> frozenset[Cell]:
    """All (row-step, column-step) pairs with the row-step first."""
    rows = [i for i, s in enumerate(shape, 1) if s == 1]
    cols = [j for j, s in enumerate(shape, 1) if s == -1]
    return frozenset((i, j) for i in rows for j in cols if i < j)


def _scan_order(shape: Sequence[int]) -> list[Cell]:
    # Columns left to right in word order, rows from latest to earliest: every
    # potential shadower of a cell is visited before the cell itself.
    rows = [i for i, s in enumerate(shape, 1) if s == 1]
    out = []
    for j, s in enumerate(shape, 1):
        if s == -1:
            out.extend((i, j) for i in reversed(rows) if i < j)
    return out


@dataclass(frozen=True, order=True)
class Tableau:
    """A shape with a set of coloured dots.  Validity is not enforced."""

    shape: tuple[int, ...]
    dots: tuple[tuple[Cell, str], ...] = field(default=())

    def __init__(self, shape: Iterable[int], dots: Mapping[Cell, str] | Iterable = ()):
        items = dots.items() if isinstance(dots, Mapping) else dots
        norm: dict[Cell, str] = {}
        for (r, c), color in items:
            if color not in COLORS:
                raise InvalidArgument(f"unknown colour {color!r}")
            if (r, c) in norm:
                raise InvalidArgument(f"two dots in cell {(r, c)}")
            norm[(int(r), int(c))] = color
        object.__setattr__(self, "shape", sign_word(shape))
        object.__setattr__(self, "dots", tuple(sorted(norm.items())))

    @property
    def size(self) -> int:
        return len(self.shape)

    @property
    def dot_map(self) -> dict[Cell, str]:
        return dict(self.dots)

    def __str__(self) -> str:
        return format_tableau(self)

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"


EMPTY_TABLEAU = Tableau(())


def is_valid(t: Tableau) -> bool:
    """Check the tableau against the definition, cell by cell."""
    all_cells = cells(t.shape)
    dots = t.dot_map
    if not set(dots) <= all_cells:
        return False
    for (r, c), color in dots.items():
        for (r2, c2) in dots:
            if color == RED and c2 == c and r2 < r:
                return False
            if color == BLUE and r2 == r and c2 > c:
                return False
    for (i, j) in all_cells:
        if (i, j) in dots:
            continue
        covered = any(
            (color == RED and c == j and r > i) or (color == BLUE and r == i and c < j)
            for (r, c), color in dots.items()
        )
        if not covered:
            return False
    return True


def completions(
    shape: Sequence[int], fixed: Mapping[Cell, str | None] | None = None
) -> Iterator[Tableau]:
    """Valid tableaux of ``shape`` agreeing with ``fixed``.

    ``fixed`` pins cells to ``"R"``, ``"B"`` or ``None`` (empty); the other
    cells are free.  Cells are scanned so that a cell's shadowers are decided
    first: a shadowed cell must stay empty, an unshadowed one must take a dot,
    so every branch of the search either dies on a pinned cell or succeeds.
    """
    shape = sign_word(shape)
    fixed = dict(fixed or {})
    order = _scan_order(shape)
    if not set(fixed) <= set(order):
        return
    n = len(order)
    dots: dict[Cell, str] = {}

    def walk(k: int, red_col: int, blue_rows: frozenset) -> Iterator[Tableau]:
        if k == n:
            yield Tableau(shape, dots)
            return
        r, c = order[k]
        if k == 0 or order[k - 1][1] != c:
            red_col = 0
        shadowed = red_col == c or r in blue_rows
        pinned = fixed.get((r, c), "free")
        if shadowed:
            if pinned not in ("free", None):
                return
            yield from walk(k + 1, red_col, blue_rows)
            return
        if pinned is None:
            return
        for color in COLORS if pinned == "free" else (pinned,):
            dots[(r, c)] = color
            if color == RED:
                yield from walk(k + 1, c, blue_rows)
            else:
                yield from walk(k + 1, red_col, blue_rows | {r})
            del dots[(r, c)]

    yield from walk(0, 0, frozenset())


def enumerate_tableaux(shape: Sequence[int]) -> list[Tableau]:
    """All valid tableaux of one shape, sorted."""
    return sorted(completions(shape))


def count_tableaux(shape: Sequence[int]) -> int:
    return sum(1 for _ in completions(shape))


def all_shapes(m: int) -> list[tuple[int, ...]]:
    if m < 0:
        raise InvalidArgument("size must be non-negative")
    return sorted(product((1, -1), repeat=m))


def enumerate_all(m: int) -> list[Tableau]:
    """Valid tableaux of every shape of length ``m``."""
    return [t for s in all_shapes(m) for t in enumerate_tableaux(s)]


def transpose(t: Tableau) -> Tableau:
    """Reverse and negate the shape, mirror cells, swap the colours."""
    m = len(t.shape)
    shape = tuple(-s for s in reversed(t.shape))
    return Tableau(shape, {(m + 1 - c, m + 1 - r): _SWAP[col] for (r, c), col in t.dots})


def restrict(t: Tableau, start: int, stop: int) -> Tableau:
    """Sub-tableau on the steps ``start+1 .. stop`` (slice convention)."""
    if not 0 <= start <= stop <= t.size:
        raise InvalidArgument(f"bad step interval [{start}, {stop})")
    return Tableau(
        t.shape[start:stop],
        {
            (r - start, c - start): col
            for (r, c), col in t.dots
            if start < r and c <= stop
        },
    )


# serialisation -----------------------------------------------------------


def tableau_to_json(t: Tableau) -> dict:
    return {
        "shape": list(t.shape),
        "dots": [{"row": r, "col": c, "color": col} for (r, c), col in t.dots],
    }


def tableau_from_json(obj: Mapping) -> Tableau:
    try:
        return Tableau(
            obj["shape"],
            {(d["row"], d["col"]): d["color"] for d in obj.get("dots", [])},
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed tableau object: {exc}") from exc


def format_tableau(t: Tableau) -> str:
    """Compact form ``+-+-:R1.2,R3.4``; the empty shape is ``ε``."""
    text = format_signs(t.shape)
    if t.dots:
        text += ":" + ",".join(f"{col}{r}.{c}" for (r, c), col in t.dots)
    return text


def parse_tableau(text: str) -> Tableau:
    text = text.strip()
    if text.startswith("{"):
        import json

        return tableau_from_json(json.loads(text))
    head, _, tail = text.partition(":")
    shape = parse_signs(head)
    dots = {}
    offset = len(head) + 1
    for item in filter(None, tail.split(",")):
        color, rc = item[:1], item[1:]
        r, dot, c = rc.partition(".")
        if color not in COLORS or not dot or not r.isdigit() or not c.isdigit():
            raise ParseError(f"bad dot {item!r}", offset)
        dots[(int(r), int(c))] = color
        offset += len(item) + 1
    return Tableau(shape, dots)


def render(t: Tableau) -> str:
    """ASCII grid: one line per row-step, one column per column-step.

    Row and column headers are the step positions in the shape word; cells
    print as ``R``, ``B`` or ``.``, and positions outside the shape as blanks.
    """
    rows = [i for i, s in enumerate(t.shape, 1) if s == 1]
    cols = [j for j, s in enumerate(t.shape, 1) if s == -1]
    if not cells(t.shape):
        return f"{format_signs(t.shape)} (no cells)"
    dots = t.dot_map
    w = max(len(str(x)) for x in rows + cols)
    lines = [" " * (w + 1) + " ".join(str(j).rjust(w) for j in cols)]
    for i in rows:
        line = [
            (dots.get((i, j), ".") if i < j else " ").rjust(w) for j in cols
        ]
        lines.append(str(i).rjust(w) + " " + " ".join(line))
    return "\n".join(lines)


__all__ = [
    "BLUE",
    "EMPTY_TABLEAU",
    "EMPTY_TEXT",
    "RED",
    "Tableau",
    "all_shapes",
    "cells",
    "completions",
    "count_tableaux",
    "enumerate_all",
    "enumerate_tableaux",
    "format_tableau",
    "is_valid",
    "parse_tableau",
    "render",
    "restrict",
    "tableau_from_json",
    "tableau_to_json",
    "transpose",
]
