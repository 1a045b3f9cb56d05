"""Permutations, standardization and the Malvenuto-Reutenauer product.

Permutations are stored in one-line notation with 1-based values.  The
empty permutation is valid and is the unit of the product.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidArgument, InvalidWord, ParseError
from .formal import FormalSum

EMPTY_TEXT = "ε"


class Permutation(tuple):
    """A bijective word on ``{1..n}``; behaves as an immutable tuple."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidWord(f"{word!r} is not a permutation of 1..{len(word)}")
        return super().__new__(cls, word)

    @classmethod
    def _trusted(cls, word: Sequence[int]) -> Permutation:
        return tuple.__new__(cls, word)

    @property
    def size(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if not self:
            return EMPTY_TEXT
        if len(self) <= 9:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"213"``, ``"2 1 3"`` or the empty forms ``ε``/``()``."""
        s = text.strip()
        if s in ("", EMPTY_TEXT, "()", "e"):
            return cls()
        tokens = s.split() if " " in s else list(s)
        for tok in tokens:
            if not tok.isdigit():
                raise ParseError(f"bad permutation token {tok!r}", s.find(tok))
        return cls(int(t) for t in tokens)


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations

    return [Permutation._trusted(p) for p in permutations(range(1, n + 1))]


def standardize(word: Sequence[int]) -> Permutation:
    """Return the permutation with the same relative order as ``word``.

    >>> str(standardize([3, 2, 7, 5]))
    '2143'
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise InvalidWord(f"{word!r} has repeated entries")
    rank = {v: i for i, v in enumerate(sorted(word), start=1)}
    return Permutation._trusted([rank[v] for v in word])


def instantiate(sigma: Sequence[int], values: Iterable[int]) -> tuple[int, ...]:
    """The unique word on the set ``values`` that standardizes to ``sigma``."""
    pool = sorted(set(values))
    if len(pool) != len(sigma):
        raise InvalidArgument(
            f"need {len(sigma)} distinct values, got {len(pool)}"
        )
    return tuple(pool[i - 1] for i in sigma)


def mr_product(sigma: Permutation, tau: Permutation) -> FormalSum[Permutation]:
    """Product of two permutations in the Malvenuto-Reutenauer algebra.

    Sums, over every split of ``{1..k+l}`` into a k-set A and its complement
    B, the concatenation of ``sigma`` instantiated on A and ``tau`` on B.
    """
    k, n = len(sigma), len(sigma) + len(tau)
    universe = range(1, n + 1)
    terms = []
    for a in combinations(universe, k):
        chosen = set(a)
        b = [v for v in universe if v not in chosen]
        terms.append(Permutation._trusted(instantiate(sigma, a) + instantiate(tau, b)))
    assert len(set(terms)) == len(terms) == comb(n, k)
    return FormalSum.from_basis(terms)


def mr_product_sum(
    s1: FormalSum[Permutation], s2: FormalSum[Permutation]
) -> FormalSum[Permutation]:
    return s1.map_bilinear(s2, mr_product)


def updown(sigma: Sequence[int]) -> tuple[int, ...]:
    """Up-Down sequence: +1 at each ascent, -1 at each descent."""
    if len(sigma) == 0:
        raise InvalidArgument("the empty permutation has no Up-Down sequence")
    return tuple(1 if b > a else -1 for a, b in zip(sigma, sigma[1:]))


def sign_word(signs: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalise a +1/-1 word."""
    out = tuple(int(s) for s in signs)
    if any(s not in (1, -1) for s in out):
        raise InvalidArgument(f"sign word entries must be +1 or -1: {out!r}")
    return out


def format_signs(signs: Sequence[int]) -> str:
    return "".join("+" if s == 1 else "-" for s in signs) or EMPTY_TEXT


def parse_signs(text: str) -> tuple[int, ...]:
    s = text.strip()
    if s in ("", EMPTY_TEXT, "()"):
        return ()
    out = []
    for i, ch in enumerate(s):
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ParseError(f"unexpected character {ch!r} in sign word", i)
    return tuple(out)
