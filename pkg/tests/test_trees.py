import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from catalan_hopf.errors import InvalidArgument, ParseError
from catalan_hopf.perms import Permutation, updown
from catalan_hopf.trees import (
    LEAF,
    canopy,
    canopy_counts,
    decode_tree,
    encode_tree,
    enumerate_trees,
    fiber,
    node,
    psi,
    restrict,
    tree_from_json,
    tree_to_json,
)

P = Permutation.parse
N = node()  # the single-node tree


def cartesian_oracle(word):
    """Stack-based min-Cartesian tree, as a parenthesised string."""
    n = len(word)
    left, right = [-1] * n, [-1] * n
    stack = []
    for i, v in enumerate(word):
        last = -1
        while stack and word[stack[-1]] > v:
            last = stack.pop()
        left[i] = last
        if stack:
            right[stack[-1]] = i
        stack.append(i)

    def enc(i):
        return "." if i < 0 else f"({enc(left[i])}{enc(right[i])})"

    return enc(stack[0]) if stack else "."


def catalan(n):
    return comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n, count", [(0, 1), (4, 14), (6, 132)])
def test_enumerate_examples(n, count):
    trees = enumerate_trees(n)
    assert len(trees) == count == len(set(trees))
    assert [encode_tree(t) for t in trees] == sorted(encode_tree(t) for t in trees)


def test_enumerate_zero_is_leaf():
    assert enumerate_trees(0) == [LEAF]


def test_psi_examples():
    assert psi(P("1")) == N
    assert psi(P("132")) == node(LEAF, node(N, LEAF))
    assert psi(P("213")) == node(N, N)
    assert psi(P("")) == LEAF


def test_psi_matches_stack_oracle():
    for n in range(7):
        for w in itertools.permutations(range(1, n + 1)):
            assert encode_tree(psi(w)) == cartesian_oracle(w)


def test_fiber_examples():
    assert fiber(N).perms == {P("1")}
    assert fiber(node(N, N)).perms == {P("213"), P("312")}
    assert fiber(node(node(LEAF, N), N)).perms == {P("2314"), P("2413"), P("3412")}


@pytest.mark.parametrize("n", range(6))
def test_fiber_is_filter_of_symmetric_group(n):
    by_tree = {}
    for w in itertools.permutations(range(1, n + 1)):
        by_tree.setdefault(cartesian_oracle(w), set()).add(tuple(w))
    for t in enumerate_trees(n):
        assert {tuple(p) for p in fiber(t).perms} == by_tree[encode_tree(t)]


def test_canopy_examples():
    assert canopy(N) == ()
    assert canopy(psi(P("213"))) == (-1, 1) == updown(P("213"))
    assert canopy(psi(P("132"))) == (1, -1) == updown(P("132"))
    with pytest.raises(InvalidArgument):
        canopy(LEAF)


def test_encoding_examples():
    assert encode_tree(LEAF) == "."
    assert encode_tree(N) == "(..)"
    assert encode_tree(psi(P("132"))) == "(.((..).))"


@pytest.mark.parametrize("bad, pos", [("(", 1), ("(..", 3), ("(...)", 3), ("x", 0), ("(..).", 4), (")", 0)])
def test_decode_errors_report_position(bad, pos):
    with pytest.raises(ParseError) as err:
        decode_tree(bad)
    assert err.value.position == pos


@pytest.mark.parametrize("n", range(9))
def test_encode_round_trip(n):
    for t in enumerate_trees(n):
        assert decode_tree(encode_tree(t)) == t
        assert tree_from_json(tree_to_json(t)) == t


def test_json_form():
    assert tree_to_json(LEAF) is None
    assert tree_to_json(psi(P("132"))) == [None, [[None, None], None]]


@pytest.mark.parametrize("n", range(12))
def test_catalan_counts(n):
    assert len(enumerate_trees(n)) == catalan(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_canopy_counts_sum_to_catalan(n):
    counts = canopy_counts(n)
    assert sum(counts.values()) == catalan(n)
    assert set(counts) == set(itertools.product((1, -1), repeat=n - 1))


@pytest.mark.parametrize("n", range(8))
def test_fibers_partition_symmetric_group(n):
    seen = set()
    for t in enumerate_trees(n):
        z = fiber(t).perms
        assert not (z & seen)
        seen |= z
        assert all(psi(s) == t for s in z)
        if n:
            assert {updown(s) for s in z} == {canopy(t)}
    assert len(seen) == factorial(n)


def test_tree_immutable():
    with pytest.raises(AttributeError):
        N.left = LEAF


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))), st.data())
def test_restriction_depends_only_on_shape(word, data):
    # the tree of any factor of a permutation is determined by psi of the whole
    i = data.draw(st.integers(0, len(word)))
    j = data.draw(st.integers(i, len(word)))
    assert psi(word[i:j]) == restrict(psi(word), i, j)
