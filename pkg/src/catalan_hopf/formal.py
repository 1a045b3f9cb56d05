"""Finitely supported integer linear combinations of hashable basis objects."""

from __future__ import annotations

from typing import Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

X = TypeVar("X", bound=Hashable)


class FormalSum(Generic[X]):
    """An immutable element of the free Z-module on some basis.

    Zero coefficients are never stored.  Keys must be hashable and mutually
    orderable; iteration and rendering follow the keys' natural order.
    Coefficients are Python ints, so arithmetic never overflows.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[X, int] | Iterable[tuple[X, int]] = ()):
        acc: dict[X, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficient must be int, got {coeff!r}")
            acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def from_basis(cls, keys: Iterable[X]) -> FormalSum[X]:
        """Sum of the given basis elements, each with coefficient one."""
        return cls((k, 1) for k in keys)

    def __getitem__(self, key: X) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[X]:
        return iter(sorted(self._terms))

    def items(self) -> list[tuple[X, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def keys(self) -> list[X]:
        return sorted(self._terms)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items()]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: FormalSum[X]) -> FormalSum[X]:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return FormalSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> FormalSum[X]:
        return FormalSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: FormalSum[X]) -> FormalSum[X]:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> FormalSum[X]:
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        return FormalSum({k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def map_bilinear(
        self, other: FormalSum, op: Callable[[X, X], FormalSum]
    ) -> FormalSum:
        """Extend ``op`` on basis pairs bilinearly to ``self`` x ``other``."""
        acc: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                for key, c in op(a, b)._terms.items():
                    acc[key] = acc.get(key, 0) + ca * cb * c
        return FormalSum(acc)

    def to_text(self, fmt: Callable[[X], str] = str) -> str:
        """Render as ``a + 2*b + -1*c``; the zero sum renders as ``0``."""
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.items():
            parts.append(fmt(key) if c == 1 else f"{c}*{fmt(key)}")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, parse_key: Callable[[str], X]) -> FormalSum[X]:
        """Inverse of :meth:`to_text` given a parser for basis elements."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            chunk = chunk.strip()
            coeff = 1
            head, star, rest = chunk.partition("*")
            if star and _is_int(head):
                coeff, chunk = int(head), rest
            terms.append((parse_key(chunk), coeff))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FormalSum({self.to_text()!r})"


def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True
