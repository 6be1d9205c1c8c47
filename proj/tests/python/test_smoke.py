from fractions import Fraction

import pytest

import peelkit


TRIANGLE_INTERIOR = [[0, 0], [3, 0], [0, 3], [1, 1]]


def test_counts():
    assert peelkit.peel_count([[0, 0], [4, 0], [5, 3], [2, 5], [-1, 3]]) == 120
    assert peelkit.peel_count(TRIANGLE_INTERIOR) == 18
    assert peelkit.peel_count_naive(TRIANGLE_INTERIOR) == 18
    assert peelkit.peel_count([[0], [1], [2]]) == 4
    assert peelkit.peel_enumerate(TRIANGLE_INTERIOR, 1) == [[0, 1, 2, 3]]


def test_rationals_round_trip():
    pts = peelkit.gale_set(2, 2)
    assert len(pts) == 5
    assert all(isinstance(x, Fraction) for row in pts for x in row)
    assert peelkit.depth(pts)[0] == 2
    assert peelkit.depth([[str(x) for x in row] for row in pts])[0] == 2


def test_defense():
    line = [[-2], [-1], [1], [2]]
    assert peelkit.depth(line, [0])[0] == 2
    assert peelkit.defends_by_peeling(line, 2)
    assert not peelkit.defends_by_peeling(line, 3)
    assert len(peelkit.base_set(2, 3)) == 7


def test_construction():
    c = peelkit.build_construction(2, 1, 9)
    assert c["passed"]
    assert c["count"] == peelkit.peel_count(c["points"])
    assert max(c["blocks"]) == 2


def test_bounds():
    assert peelkit.defense_number(3, 2) == 6
    assert peelkit.growth_base(3, 1) == (256, 256)
    lo, hi = peelkit.growth_base(3, 3)
    assert lo <= hi and lo**3 <= 6**8 <= hi**3
    assert peelkit.theorem1_m(4) == 5
    assert peelkit.optimal_m(3, 10) == 3


def test_errors():
    with pytest.raises(peelkit.InputError):
        peelkit.peel_count([[0, 0], [1, 1], [2, 2]])
    with pytest.raises(peelkit.InputError):
        peelkit.peel_count([[0.5, 1]])
    with pytest.raises(peelkit.ResourceError):
        peelkit.peel_count(peelkit.build_construction(2, 1, 9)["points"], state_budget=2)


def test_svg_and_verify():
    assert "<svg" in peelkit.render_svg(TRIANGLE_INTERIOR)
    results = peelkit.verify("bounds", 0)
    assert results and all(r["passed"] for r in results)
