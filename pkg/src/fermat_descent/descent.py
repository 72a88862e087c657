"""Pulling curve points back to solutions of the equation.

For an affine point with XY != 0 put A' = 2Y / (-BC)^((p-1)/2). A solution
mapping to (X, +-Y) also solves +-A' x^p - B y^p + C z^p = 0, and together
with the original equation this pins down

    x^p / z^p = -2C / (A +- A'),
    y^p / z^p = (-A +- A') C / ((-A -+ A') B).

A branch yields a solution exactly when both ratios are rational p-th powers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import rational_pth_root
from .curve import CurveModel, CurvePoint, build_curve, forward_map, is_on_curve
from .equation import (
    FermatEquation,
    Triplet,
    degenerate_zero_coordinate_solutions,
    evaluate,
    trivial_solution_by_sum,
)
from .errors import BudgetExceeded, FermatDescentError, NotOnCurve, ZeroCoordinate
from .point_search import SearchBounds, SearchResult, search

SOLUTION = "solution"
NO_RATIONAL_ROOT = "no_rational_root"
DEGENERATE_DENOMINATOR = "degenerate_denominator"

CAVEAT = (
    "Point search is bounded (d <= {d_max}, |a| <= {a_max} on the integral "
    "model); solutions are complete only relative to these bounds."
)


@dataclass(frozen=True)
class RecoveryBranch:
    sign: int
    a_prime: Fraction
    x_over_z_pth: Optional[Fraction]
    y_over_z_pth: Optional[Fraction]
    outcome: str
    triplet: Optional[Triplet] = None
    failed_ratios: tuple[str, ...] = ()


@dataclass(frozen=True)
class PointRecovery:
    """Recovery attempt for one searched point; ``skipped`` says why none ran."""

    point: CurvePoint
    branches: tuple[RecoveryBranch, ...] = ()
    skipped: Optional[str] = None


@dataclass
class SolutionReport:
    equation: FermatEquation
    curve: CurveModel
    search: Optional[SearchResult]
    recoveries: list[PointRecovery] = field(default_factory=list)
    solutions: list[Triplet] = field(default_factory=list)
    degenerate_solutions: list[Triplet] = field(default_factory=list)
    trivial_solution: Optional[Triplet] = None
    complete_within_bounds: bool = False
    caveat: str = ""
    diagnostics: list[str] = field(default_factory=list)
    annotations: dict[str, str] = field(default_factory=dict)


def compute_a_prime(pt: CurvePoint, eq: FermatEquation) -> Fraction:
    if pt.is_infinity or pt.X == 0 or pt.Y == 0:
        raise ZeroCoordinate("recovery needs an affine point with XY != 0")
    return 2 * pt.Y / Fraction((-eq.B * eq.C) ** ((eq.p - 1) // 2))


def _lift(u: Fraction, v: Fraction) -> Triplet:
    # x/z = u, y/z = v with z > 0
    t = Triplet(
        u.numerator * v.denominator,
        v.numerator * u.denominator,
        u.denominator * v.denominator,
    )
    return t.primitive()


def _branch(sign: int, a_prime: Fraction, eq: FermatEquation) -> RecoveryBranch:
    A, B, C, p = eq.A, eq.B, eq.C, eq.p
    den = A + sign * a_prime
    if den == 0:
        return RecoveryBranch(sign, a_prime, None, None, DEGENERATE_DENOMINATOR)
    rx = Fraction(-2 * C) / den
    ry = (-A + sign * a_prime) * C / ((-A - sign * a_prime) * B)
    u = rational_pth_root(rx, p)
    v = rational_pth_root(ry, p)
    failed = tuple(name for name, r in (("x/z", u), ("y/z", v)) if r is None)
    if failed:
        return RecoveryBranch(sign, a_prime, rx, ry, NO_RATIONAL_ROOT, None, failed)
    return RecoveryBranch(sign, a_prime, rx, ry, SOLUTION, _lift(u, v))


def recover(pt: CurvePoint, eq: FermatEquation) -> list[RecoveryBranch]:
    """Both +/- branches for one point, ``+`` first.

    Solution triplets are primitive with ``z > 0``, mirroring the
    ``(x/z, y/z)`` parametrization they come from.
    """
    if pt.is_infinity or pt.X == 0 or pt.Y == 0:
        raise ZeroCoordinate("recovery needs an affine point with XY != 0")
    if not is_on_curve(pt, build_curve(eq)):
        raise NotOnCurve(f"{pt} is not on the curve of {eq}")
    a_prime = compute_a_prime(pt, eq)
    return [_branch(1, a_prime, eq), _branch(-1, a_prime, eq)]


def verify_consistency(t: Triplet, pt: CurvePoint, eq: FermatEquation) -> bool:
    """Does ``t`` solve ``eq`` and map onto ``pt`` up to the sign of Y?"""
    if evaluate(eq, t) != 0 or t.x == 0:
        return False
    try:
        image = forward_map(eq, t)
    except FermatDescentError:
        return False
    return image == pt or image == pt.negate()


def solve(eq: FermatEquation, bounds: SearchBounds = SearchBounds()) -> SolutionReport:
    """Run the whole pipeline for one equation.

    Collects the sum-zero solution, the zero-coordinate solutions, and
    everything recovered from bounded-search points with XY != 0. Reported
    solutions are canonical (first nonzero coordinate positive) and each one
    is re-checked against the equation before it is kept.
    """
    curve = build_curve(eq)
    report = SolutionReport(
        equation=eq,
        curve=curve,
        search=None,
        caveat=CAVEAT.format(d_max=bounds.d_max, a_max=bounds.a_max),
    )
    report.trivial_solution = trivial_solution_by_sum(eq)
    report.degenerate_solutions = degenerate_zero_coordinate_solutions(eq)

    try:
        result = search(curve, bounds)
    except BudgetExceeded as exc:
        result = exc.partial
        report.diagnostics.append("search: time budget exceeded, point list is partial")
    report.search = result
    report.complete_within_bounds = result.complete_within_bounds

    found = set()
    if report.trivial_solution is not None:
        found.add(report.trivial_solution.canonical())
    found.update(report.degenerate_solutions)
    for pt in result.affine_points:
        if pt.X == 0 or pt.Y == 0:
            reason = "X = 0" if pt.X == 0 else "Y = 0"
            report.recoveries.append(PointRecovery(pt, skipped=reason))
            continue
        try:
            branches = recover(pt, eq)
        except FermatDescentError as exc:
            report.diagnostics.append(f"recover {pt}: {exc}")
            continue
        report.recoveries.append(PointRecovery(pt, tuple(branches)))
        for br in branches:
            if br.outcome == SOLUTION:
                found.add(br.triplet.canonical())

    for t in sorted(found):
        if evaluate(eq, t) == 0:
            report.solutions.append(t)
        else:
            report.diagnostics.append(f"discarded {t}: fails the equation")
    return report
