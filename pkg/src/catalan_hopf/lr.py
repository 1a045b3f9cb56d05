"""The Loday-Ronco product on planar binary trees.

The reference route multiplies the two fiber sums in the permutation
algebra and regroups the result by tree.  A second route reads the product
off restrictions of the candidate trees; the two are kept bit-identical by
a differential test.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache

from .errors import ClosureViolation, InvalidArgument
from .formal import FormalSum
from .perms import Permutation, mr_product
from .trees import LEAF, BinaryTree, canopy, enumerate_trees, fiber, fiber_list, psi, representative

TreeSum = FormalSum  # FormalSum[BinaryTree]


def psi_star(tree: BinaryTree) -> FormalSum[Permutation]:
    """Sum of the permutations in the fiber of ``tree``."""
    return FormalSum.from_basis(fiber_list(tree))


def lr_product_reference(t1: BinaryTree, t2: BinaryTree) -> FormalSum[BinaryTree]:
    """Expand both fibers, multiply in S_infinity, regroup by fiber.

    Raises ClosureViolation when some tree's multiplicity is not an exact
    multiple of its fiber size.
    """
    return _lr_reference(t1, t2)


@lru_cache(maxsize=None)
def _lr_reference(t1: BinaryTree, t2: BinaryTree) -> FormalSum[BinaryTree]:
    counts: Counter = Counter()
    for s1 in fiber_list(t1):
        for s2 in fiber_list(t2):
            for sigma, c in mr_product(s1, s2).items():
                counts[psi(sigma)] += c
    out = {}
    for tree, m in counts.items():
        q, r = divmod(m, len(fiber(tree)))
        if r:
            raise ClosureViolation(
                f"{t1} * {t2}: tree {tree} hit {m} times, fiber size {len(fiber(tree))}"
            )
        out[tree] = q
    return FormalSum(out)


@lru_cache(maxsize=None)
def _restriction_index(n: int) -> dict:
    index: dict = defaultdict(list)
    for tree in enumerate_trees(n):
        sigma = representative(tree)
        for k in range(n + 1):
            index[(psi(sigma[:k]), psi(sigma[k:]))].append(tree)
    return index


def lr_product_fast(t1: BinaryTree, t2: BinaryTree) -> FormalSum[BinaryTree]:
    """Trees whose first ``size(t1)`` nodes induce ``t1`` and the rest ``t2``.

    A fixed permutation in the fiber of T occurs in the fiber-sum product
    exactly once per way of cutting it into a prefix from fiber(t1) and a
    suffix from fiber(t2), and there is only one cut position.
    """
    n = t1.size + t2.size
    return FormalSum.from_basis(_restriction_index(n).get((t1, t2), ()))


def lr_product(
    t1: BinaryTree, t2: BinaryTree, method: str = "reference"
) -> FormalSum[BinaryTree]:
    if method == "reference":
        return lr_product_reference(t1, t2)
    if method == "fast":
        return lr_product_fast(t1, t2)
    raise InvalidArgument(f"unknown method {method!r}")


def lr_product_sum(
    s1: FormalSum[BinaryTree], s2: FormalSum[BinaryTree], method: str = "reference"
) -> FormalSum[BinaryTree]:
    return s1.map_bilinear(s2, lambda a, b: lr_product(a, b, method))


def canopy_split(
    t1: BinaryTree, t2: BinaryTree, method: str = "reference"
) -> dict[tuple[int, ...], FormalSum[BinaryTree]]:
    """Group the terms of ``t1 * t2`` by canopy.

    Keys are drawn from ``canopy(t1) + (c,) + canopy(t2)`` for c = +1, -1;
    a connector whose class is empty is still reported, with the zero sum.
    Any other canopy is returned as its own key so callers can detect it.
    """
    if t1.is_leaf or t2.is_leaf:
        raise InvalidArgument("canopy_split needs two non-leaf trees")
    q1, q2 = canopy(t1), canopy(t2)
    groups: dict[tuple[int, ...], dict] = {q1 + (1,) + q2: {}, q1 + (-1,) + q2: {}}
    for tree, c in lr_product(t1, t2, method).items():
        groups.setdefault(canopy(tree), {})[tree] = c
    return {key: FormalSum(terms) for key, terms in groups.items()}


UNIT = LEAF
