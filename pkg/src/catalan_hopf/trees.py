"""Planar binary trees and the projection from permutations.

A tree is either the leaf or a node with an ordered pair of subtrees; its
size is the number of nodes.  Trees compare, hash and sort by their
parenthesised encoding, which is also the canonical order used throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Sequence

from .errors import InvalidArgument, ParseError
from .perms import Permutation, instantiate


class BinaryTree:
    """Immutable planar binary tree.  Use :data:`LEAF` and :func:`node`."""

    __slots__ = ("left", "right", "size", "_code")

    def __init__(self, left: BinaryTree | None = None, right: BinaryTree | None = None):
        if (left is None) != (right is None):
            raise InvalidArgument("a node needs both subtrees")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if left is None:
            object.__setattr__(self, "size", 0)
            object.__setattr__(self, "_code", ".")
        else:
            object.__setattr__(self, "size", left.size + right.size + 1)
            object.__setattr__(self, "_code", f"({left._code}{right._code})")

    def __setattr__(self, name, value):
        raise AttributeError("BinaryTree is immutable")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryTree):
            return NotImplemented
        return self._code == other._code

    def __lt__(self, other: BinaryTree) -> bool:
        return self._code < other._code

    def __hash__(self) -> int:
        return hash(self._code)

    def __str__(self) -> str:
        return self._code

    def __repr__(self) -> str:
        return f"BinaryTree({self._code!r})"

    def __reduce__(self):
        return (decode_tree, (self._code,))


LEAF = BinaryTree()


def node(left: BinaryTree = LEAF, right: BinaryTree = LEAF) -> BinaryTree:
    return BinaryTree(left, right)


def encode_tree(tree: BinaryTree) -> str:
    """``.`` for the leaf, ``(`` left right ``)`` for a node."""
    return tree._code


def decode_tree(text: str) -> BinaryTree:
    stack: list[list[BinaryTree]] = []
    result = None
    for pos, ch in enumerate(text):
        if result is not None:
            raise ParseError("trailing characters after tree", pos)
        if ch == "(":
            stack.append([])
            continue
        if ch == ".":
            t = LEAF
        elif ch == ")":
            if not stack or len(stack[-1]) != 2:
                raise ParseError("unexpected ')'", pos)
            t = BinaryTree(*stack.pop())
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        if stack:
            if len(stack[-1]) == 2:
                raise ParseError("node has more than two children", pos)
            stack[-1].append(t)
        else:
            result = t
    if result is None:
        raise ParseError("incomplete tree", len(text))
    return result


def tree_to_json(tree: BinaryTree) -> Any:
    """Nested arrays: the leaf is ``None`` and a node is ``[left, right]``."""
    if tree.is_leaf:
        return None
    return [tree_to_json(tree.left), tree_to_json(tree.right)]


def tree_from_json(obj: Any) -> BinaryTree:
    if obj is None:
        return LEAF
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(f"expected null or a 2-element list, got {obj!r}")
    return BinaryTree(tree_from_json(obj[0]), tree_from_json(obj[1]))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (LEAF,)
    out = [
        BinaryTree(left, right)
        for k in range(n)
        for left in _trees(k)
        for right in _trees(n - 1 - k)
    ]
    return tuple(sorted(out))


def enumerate_trees(n: int) -> list[BinaryTree]:
    """All trees with ``n`` nodes, sorted by encoding."""
    if n < 0:
        raise InvalidArgument("size must be non-negative")
    return list(_trees(n))


def psi(sigma: Sequence[int]) -> BinaryTree:
    """Shape of the increasing binary tree read in-order as ``sigma``.

    The root sits at the position of the minimum; the prefix before it and
    the suffix after it give the two subtrees.  Only relative order matters,
    so ``sigma`` may be any word with distinct entries.
    """
    if not sigma:
        return LEAF
    i = min(range(len(sigma)), key=sigma.__getitem__)
    return BinaryTree(psi(sigma[:i]), psi(sigma[i + 1 :]))


@lru_cache(maxsize=None)
def _fiber(tree: BinaryTree) -> tuple[Permutation, ...]:
    if tree.is_leaf:
        return (Permutation(),)
    n, k = tree.size, tree.left.size
    rest = range(2, n + 1)
    out = []
    for chosen in combinations(rest, k):
        picked = set(chosen)
        others = [v for v in rest if v not in picked]
        for u in _fiber(tree.left):
            left = instantiate(u, chosen)
            for v in _fiber(tree.right):
                out.append(Permutation._trusted(left + (1,) + instantiate(v, others)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class TreeFiber:
    tree: BinaryTree
    perms: frozenset

    def __len__(self) -> int:
        return len(self.perms)


def fiber(tree: BinaryTree) -> TreeFiber:
    """All permutations whose increasing tree has shape ``tree``."""
    return TreeFiber(tree, frozenset(_fiber(tree)))


def fiber_list(tree: BinaryTree) -> list[Permutation]:
    """The fiber in lexicographic order."""
    return list(_fiber(tree))


def canopy(tree: BinaryTree) -> tuple[int, ...]:
    """The +1/-1 word shared by every permutation in the tree's fiber."""
    if tree.is_leaf:
        raise InvalidArgument("the leaf has no canopy")
    return tuple(_canopy(tree))


def _canopy(t: BinaryTree) -> list[int]:
    out = []
    if not t.left.is_leaf:
        out += _canopy(t.left)
        out.append(-1)
    if not t.right.is_leaf:
        out.append(1)
        out += _canopy(t.right)
    return out


def canopy_counts(n: int) -> Counter:
    """Number of trees of size ``n`` for each canopy."""
    return Counter(canopy(t) for t in _trees(n))


def representative(tree: BinaryTree) -> Permutation:
    """The lexicographically smallest permutation in the fiber."""
    return _fiber(tree)[0]


def restrict(tree: BinaryTree, start: int, stop: int) -> BinaryTree:
    """Tree induced on the in-order node positions ``start..stop-1`` (0-based).

    Well defined because the increasing-tree shape of a factor of a
    permutation depends only on the shape of the whole tree.
    """
    return psi(representative(tree)[start:stop])


__all__ = [
    "BinaryTree",
    "LEAF",
    "TreeFiber",
    "canopy",
    "canopy_counts",
    "decode_tree",
    "encode_tree",
    "enumerate_trees",
    "fiber",
    "fiber_list",
    "node",
    "psi",
    "representative",
    "restrict",
    "tree_from_json",
    "tree_to_json",
]
