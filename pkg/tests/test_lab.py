import pytest

from catalan_hopf.lab import (
    ShapeCensus,
    SplittingViolation,
    explore_correspondence,
    shape_census,
    verify_canopy_splitting,
)
from catalan_hopf.tableaux import count_tableaux


def test_census_examples():
    assert shape_census(2).per_shape == {(1,): (1, 1), (-1,): (1, 1)}
    assert shape_census(4).totals == (14, 14)
    c5 = shape_census(5)
    assert c5.per_shape[(1, -1, 1, -1)] == (5, 5)
    assert c5.totals == (42, 42)


@pytest.mark.parametrize("n", range(1, 11))
def test_census_equal(n):
    assert shape_census(n).mismatches == []


def test_census_json_round_trip():
    c = shape_census(5)
    back = ShapeCensus.from_json(c.to_json())
    assert back == c


def test_census_bounds():
    with pytest.raises(ValueError):
        shape_census(0)


def test_splitting_examples():
    r = verify_canopy_splitting(3)
    classes = {(a, b, s): (size, tabs) for a, b, s, size, tabs in r.classes}
    assert classes[("(..)", "(..)", 1)] == (1, 1)
    assert classes[("(..)", "(..)", -1)] == (1, 1)
    # psi(12) * single: connector -1 class holds two trees, shape +- has two tableaux
    assert classes[("(.(..))", "(..)", -1)] == (2, count_tableaux((1, -1))) == (2, 2)


def test_splitting_exhaustive():
    r = verify_canopy_splitting(6)
    assert r.pairs_checked > 0
    assert r.to_json()["class_size_exceeds_tableau_count"] == 0
    assert r.multiplicity_free


def test_splitting_violation_is_an_assertion():
    assert issubclass(SplittingViolation, AssertionError)


def test_explore_trivial_levels():
    r = explore_correspondence(2, "identity")
    assert r.status == "unique"
    assert r.bijection == {"(..)": "ε", "((..).)": "-", "(.(..))": "+"}
    assert explore_correspondence(2, "shift").status == "unique"


def test_explore_level_three_two_way():
    r = explore_correspondence(3, "identity")
    assert r.levels[-1]["shapes"]["+-"] == {"trees": 2, "matchings_min": 2, "matchings_max": 2}
    assert r.status.startswith("ambiguous")


def test_explore_shift_contradiction_witness():
    r = explore_correspondence(4, "shift")
    assert r.status == "contradiction at n=4"
    witness = r.levels[-1]["contradictions"][0]
    assert witness["pair"] == ["(..)", "((.(..)).)"]
    assert witness["oracle_class_size"] != witness["predicted_class_size"]


def test_explore_identity_survives_to_six():
    r = explore_correspondence(6, "identity", cap=16)
    assert all(level["partials_out"] > 0 for level in r.levels)
    assert r.to_json()["strategy"] == "identity"
