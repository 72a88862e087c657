from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fermat_descent.curve import CurvePoint, build_curve, forward_map, is_on_curve
from fermat_descent.descent import (
    DEGENERATE_DENOMINATOR,
    NO_RATIONAL_ROOT,
    SOLUTION,
    compute_a_prime,
    recover,
    solve,
    verify_consistency,
)
from fermat_descent.equation import FermatEquation, Triplet, evaluate, sign_orbit
from fermat_descent.errors import NotOnCurve, ZeroCoordinate
from fermat_descent.point_search import SearchBounds
from conftest import EX1, EX2, EX3, SOL2, SOL3

SMALL = SearchBounds(4, 2000)


@pytest.mark.parametrize(
    "pt,eq,a_prime",
    [
        (CurvePoint(99, 98010), EX2, 20),
        (CurvePoint(-63, 3969), EX3, 2),
        (CurvePoint(99, -98010), EX2, -20),
    ],
)
def test_compute_a_prime(pt, eq, a_prime):
    assert compute_a_prime(pt, eq) == a_prime


def test_a_prime_rejects_axis_points():
    with pytest.raises(ZeroCoordinate):
        compute_a_prime(CurvePoint(0, 9801), EX2)


def by_sign(branches):
    return {b.sign: b for b in branches}


def test_recover_example2():
    br = by_sign(recover(CurvePoint(99, 98010), EX2))
    assert (br[1].x_over_z_pth, br[1].y_over_z_pth) == (-1, -1)
    assert br[1].outcome == SOLUTION
    assert br[1].triplet == Triplet(-1, -1, 1)
    assert (br[-1].x_over_z_pth, br[-1].y_over_z_pth) == (Fraction(11, 9), Fraction(-121, 81))
    assert br[-1].outcome == NO_RATIONAL_ROOT
    assert br[-1].failed_ratios == ("x/z", "y/z")


def test_recover_example3():
    branches = recover(CurvePoint(-63, 3969), EX3)
    sol = [b for b in branches if b.outcome == SOLUTION]
    bad = [b for b in branches if b.outcome == NO_RATIONAL_ROOT]
    assert len(sol) == len(bad) == 1
    assert (sol[0].x_over_z_pth, sol[0].y_over_z_pth) == (-1, 1)
    assert sol[0].triplet == Triplet(-1, 1, 1)
    assert (bad[0].x_over_z_pth, bad[0].y_over_z_pth) == (Fraction(-7, 9), Fraction(49, 81))


def test_recover_rejects_axis_and_off_curve_points():
    with pytest.raises(ZeroCoordinate):
        recover(CurvePoint(0, 9801), EX2)
    with pytest.raises(NotOnCurve):
        recover(CurvePoint(1, 1), EX2)


@pytest.mark.parametrize(
    "pt,eq",
    [
        (CurvePoint(99, 98010), EX2),
        (CurvePoint(99, -98010), EX2),
        (CurvePoint(-63, 3969), EX3),
        (CurvePoint(-63, -3969), EX3),
    ],
)
def test_branch_exclusivity_on_paper_points(pt, eq):
    outcomes = sorted(b.outcome for b in recover(pt, eq))
    assert outcomes == [NO_RATIONAL_ROOT, SOLUTION]
    for b in recover(pt, eq):
        if b.outcome == SOLUTION:
            assert verify_consistency(b.triplet, pt, eq)
            assert evaluate(eq, b.triplet) == 0


def test_degenerate_denominator_branch():
    from fermat_descent.descent import _branch

    # A' = -A zeroes the + branch denominator; the - branch still runs
    br = _branch(1, Fraction(-2), EX2)
    assert br.outcome == DEGENERATE_DENOMINATOR
    assert br.x_over_z_pth is None
    assert _branch(-1, Fraction(-2), EX2).outcome != DEGENERATE_DENOMINATOR


@pytest.mark.parametrize(
    "t,pt,eq,expected",
    [
        (Triplet(-1, -1, 1), CurvePoint(99, 98010), EX2, True),
        (Triplet(-1, 1, 1), CurvePoint(-63, 3969), EX3, True),
        (Triplet(1, 1, 1), CurvePoint(99, 98010), EX2, False),
        (Triplet(2, 2, -2), CurvePoint(99, -98010), EX2, True),
        (Triplet(-1, -1, 1), CurvePoint(0, 9801), EX2, False),
    ],
)
def test_verify_consistency(t, pt, eq, expected):
    assert verify_consistency(t, pt, eq) is expected


@given(st.sampled_from([(EX2, SOL2), (EX3, SOL3)]), st.integers(-12, 12).filter(bool))
def test_round_trip(case, lam):
    eq, t = case
    for variant, tt in sign_orbit(eq, t):
        scaled = tt.scaled(lam)
        pt = forward_map(variant.equation, scaled)
        got = {b.triplet.canonical() for b in recover(pt, variant.equation) if b.outcome == SOLUTION}
        assert tt.canonical() in got


@pytest.mark.parametrize("pt,eq", [(CurvePoint(99, 98010), EX2), (CurvePoint(-63, 3969), EX3)])
def test_a_prime_antisymmetry(pt, eq):
    assert compute_a_prime(pt.negate(), eq) == -compute_a_prime(pt, eq)
    plus = by_sign(recover(pt, eq))
    minus = by_sign(recover(pt.negate(), eq))
    for s in (1, -1):
        assert plus[s].x_over_z_pth == minus[-s].x_over_z_pth
        assert plus[s].y_over_z_pth == minus[-s].y_over_z_pth
        assert plus[s].outcome == minus[-s].outcome
        assert plus[s].triplet == minus[-s].triplet


def test_solve_example2():
    r = solve(EX2, SMALL)
    assert r.solutions == [Triplet(1, 1, -1)]
    assert len(r.search.points) == 5
    assert r.complete_within_bounds
    assert "complete only relative" in r.caveat


def test_solve_example3():
    r = solve(EX3, SMALL)
    assert r.solutions == [Triplet(1, -1, -1)]


def test_solve_example1_has_no_solutions():
    r = solve(EX1, SMALL)
    assert r.solutions == []
    assert all(rc.skipped == "X = 0" for rc in r.recoveries)
    assert len(r.recoveries) == 2


def test_solve_collects_trivial_and_degenerate():
    r = solve(FermatEquation(1, 2, -3, 5), SearchBounds(2, 500))
    assert r.trivial_solution == Triplet(1, 1, 1)
    assert Triplet(1, 1, 1) in r.solutions
    r = solve(FermatEquation(7, 32, -1, 5), SearchBounds(2, 500))
    assert Triplet(0, 1, 2) in r.degenerate_solutions
    assert Triplet(0, 1, 2) in r.solutions
    for t in r.solutions:
        assert evaluate(r.equation, t) == 0


def test_solve_sum_zero_equation_recovers_from_curve():
    # (1,1,1) solves 2x^5 + 9y^5 - 11z^5; its curve point must pull it back too
    eq = FermatEquation(2, 9, -11, 5)
    pt = forward_map(eq, Triplet(1, 1, 1))
    assert is_on_curve(pt, build_curve(eq))
    r = solve(eq, SearchBounds(2, 1000))
    assert pt in r.search.points
    recovered = {
        b.triplet.canonical()
        for rc in r.recoveries
        for b in rc.branches
        if b.outcome == SOLUTION
    }
    assert Triplet(1, 1, 1) in recovered


def test_solve_reports_budget_cutoff(monkeypatch):
    from fermat_descent import point_search

    monkeypatch.setattr(point_search, "CHUNK", 8)
    r = solve(EX2, SearchBounds(8, 10 ** 6, time_budget=1e-9))
    assert not r.complete_within_bounds
    assert any("budget" in d for d in r.diagnostics)
