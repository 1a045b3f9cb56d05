import itertools
from collections import Counter

import pytest

from catalan_hopf.formal import FormalSum
from catalan_hopf.lr import canopy_split, lr_product, lr_product_sum, psi_star
from catalan_hopf.perms import Permutation
from catalan_hopf.trees import LEAF, decode_tree, encode_tree, enumerate_trees, fiber, node, psi
from conftest import brute_standardize
from test_trees import cartesian_oracle

P = Permutation.parse
N = node()


def T(word):
    return psi(P(word))


def trees(*words):
    return FormalSum.from_basis(T(w) for w in words)


def brute_lr(t1, t2):
    """Regroup the fiber-sum product found by filtering S_{k+l}."""
    k, n = t1.size, t1.size + t2.size
    e1, e2 = encode_tree(t1), encode_tree(t2)
    hits, sizes = Counter(), Counter()
    for w in itertools.permutations(range(1, n + 1)):
        code = cartesian_oracle(w)
        sizes[code] += 1
        if cartesian_oracle(brute_standardize(w[:k])) == e1 and cartesian_oracle(brute_standardize(w[k:])) == e2:
            hits[code] += 1
    assert all(hits[c] % sizes[c] == 0 for c in hits)
    return FormalSum({decode_tree(c): hits[c] // sizes[c] for c in hits})


def test_psi_star_examples():
    assert psi_star(N) == FormalSum.from_basis([P("1")])
    assert psi_star(T("213")) == FormalSum.from_basis([P("213"), P("312")])
    assert psi_star(T("132")) == FormalSum.from_basis([P("132")])


@pytest.mark.parametrize("method", ["reference", "fast"])
def test_lr_examples(method):
    assert lr_product(N, N, method) == trees("12", "21")
    assert lr_product(T("12"), N, method) == trees("123", "132", "231")
    assert lr_product(N, T("132"), method) == trees("1243", "2143")
    assert fiber(T("2143")).perms == {P("2143"), P("3142"), P("4132")}


@pytest.mark.parametrize("n", range(6))
def test_lr_matches_brute_force(n):
    for k in range(n + 1):
        for t1 in enumerate_trees(k):
            for t2 in enumerate_trees(n - k):
                assert lr_product(t1, t2) == brute_lr(t1, t2)


@pytest.mark.parametrize("n", range(8))
def test_fast_path_identical_to_reference(n):
    for k in range(n + 1):
        for t1 in enumerate_trees(k):
            for t2 in enumerate_trees(n - k):
                assert lr_product(t1, t2, "fast") == lr_product(t1, t2, "reference")


def test_bilinearity_examples():
    zero = FormalSum()
    assert lr_product_sum(trees("1", "12"), zero) == zero
    assert lr_product_sum(2 * trees("1"), trees("1")) == 2 * trees("12", "21")
    assert lr_product_sum(trees("1", "12"), trees("1")) == trees("12", "21") + trees("123", "132", "231")


def test_leaf_is_unit():
    for n in range(5):
        for t in enumerate_trees(n):
            assert lr_product(LEAF, t) == FormalSum.from_basis([t]) == lr_product(t, LEAF)


def test_grading():
    for k, l in [(1, 3), (2, 2), (3, 2)]:
        for t1 in enumerate_trees(k):
            for t2 in enumerate_trees(l):
                assert all(t.size == k + l for t in lr_product(t1, t2))


def test_canopy_split_examples():
    assert canopy_split(N, N) == {(1,): trees("12"), (-1,): trees("21")}
    assert canopy_split(T("12"), N) == {(1, 1): trees("123"), (1, -1): trees("132", "231")}
    assert canopy_split(N, T("132")) == {(1, 1, -1): trees("1243"), (-1, 1, -1): trees("2143")}


def test_canopy_split_rejects_leaf():
    with pytest.raises(ValueError):
        canopy_split(LEAF, N)
