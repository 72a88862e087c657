"""JSON encoding of solution reports.

Integers and rationals are written as decimal strings ("-121/81"), never as
JSON numbers, because the curve constants overflow 64-bit and float ranges.
"""
from __future__ import annotations

import json
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Optional

from .curve import INFINITY, CurveModel, CurvePoint
from .descent import PointRecovery, RecoveryBranch, SolutionReport
from .equation import FermatEquation, Triplet
from .point_search import SearchBounds, SearchResult

FORMAT_VERSION = 1


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _unq(s: str) -> Fraction:
    return Fraction(s)


def _opt(fn, v):
    return None if v is None else fn(v)


def point_to_json(pt: CurvePoint) -> Any:
    return "infinity" if pt.is_infinity else [_q(pt.X), _q(pt.Y)]


def point_from_json(obj) -> CurvePoint:
    return INFINITY if obj == "infinity" else CurvePoint(_unq(obj[0]), _unq(obj[1]))


def triplet_to_json(t: Triplet) -> list[str]:
    return [str(c) for c in t]


def triplet_from_json(obj) -> Triplet:
    return Triplet(*(int(c) for c in obj))


def equation_to_json(eq: FermatEquation) -> dict:
    return {"A": str(eq.A), "B": str(eq.B), "C": str(eq.C), "p": str(eq.p)}


def equation_from_json(obj) -> FermatEquation:
    return FermatEquation(int(obj["A"]), int(obj["B"]), int(obj["C"]), int(obj["p"]))


def bounds_to_json(b: SearchBounds) -> dict:
    return {
        "d_max": str(b.d_max),
        "a_max": str(b.a_max),
        "time_budget": None if b.time_budget is None else repr(b.time_budget),
    }


def bounds_from_json(obj) -> SearchBounds:
    tb = obj.get("time_budget")
    return SearchBounds(int(obj["d_max"]), int(obj["a_max"]), None if tb is None else float(tb))


def _branch_to_json(br: RecoveryBranch) -> dict:
    return {
        "sign": "+" if br.sign > 0 else "-",
        "a_prime": _q(br.a_prime),
        "x_over_z_pth": _opt(_q, br.x_over_z_pth),
        "y_over_z_pth": _opt(_q, br.y_over_z_pth),
        "outcome": br.outcome,
        "triplet": _opt(triplet_to_json, br.triplet),
        "failed_ratios": list(br.failed_ratios),
    }


def _branch_from_json(obj) -> RecoveryBranch:
    return RecoveryBranch(
        sign=1 if obj["sign"] == "+" else -1,
        a_prime=_unq(obj["a_prime"]),
        x_over_z_pth=_opt(_unq, obj["x_over_z_pth"]),
        y_over_z_pth=_opt(_unq, obj["y_over_z_pth"]),
        outcome=obj["outcome"],
        triplet=_opt(triplet_from_json, obj["triplet"]),
        failed_ratios=tuple(obj["failed_ratios"]),
    )


def report_to_dict(r: SolutionReport) -> dict:
    c = r.curve
    return {
        "equation": equation_to_json(r.equation),
        "curve": {
            "p": str(c.p),
            "rational_constant": _q(c.rational_constant),
            "integral_constant": str(c.integral_constant),
            "genus": str(c.genus),
        },
        "search": None if r.search is None else {
            "points": [point_to_json(pt) for pt in r.search.points],
            "bounds": bounds_to_json(r.search.bounds),
            "complete_within_bounds": r.search.complete_within_bounds,
        },
        "recoveries": [
            {
                "point": point_to_json(rc.point),
                "branches": [_branch_to_json(b) for b in rc.branches],
                "skipped": rc.skipped,
            }
            for rc in r.recoveries
        ],
        "solutions": [triplet_to_json(t) for t in r.solutions],
        "degenerate_solutions": [triplet_to_json(t) for t in r.degenerate_solutions],
        "trivial_solution": _opt(triplet_to_json, r.trivial_solution),
        "complete_within_bounds": r.complete_within_bounds,
        "caveat": r.caveat,
        "diagnostics": list(r.diagnostics),
        "annotations": dict(r.annotations),
    }


def report_from_dict(obj: dict) -> SolutionReport:
    eq = equation_from_json(obj["equation"])
    cv = obj["curve"]
    curve = CurveModel(int(cv["p"]), _unq(cv["rational_constant"]), int(cv["integral_constant"]), eq)
    s = obj["search"]
    result = None if s is None else SearchResult(
        [point_from_json(pt) for pt in s["points"]],
        bounds_from_json(s["bounds"]),
        s["complete_within_bounds"],
    )
    return SolutionReport(
        equation=eq,
        curve=curve,
        search=result,
        recoveries=[
            PointRecovery(
                point_from_json(rc["point"]),
                tuple(_branch_from_json(b) for b in rc["branches"]),
                rc["skipped"],
            )
            for rc in obj["recoveries"]
        ],
        solutions=[triplet_from_json(t) for t in obj["solutions"]],
        degenerate_solutions=[triplet_from_json(t) for t in obj["degenerate_solutions"]],
        trivial_solution=_opt(triplet_from_json, obj["trivial_solution"]),
        complete_within_bounds=obj["complete_within_bounds"],
        caveat=obj["caveat"],
        diagnostics=list(obj["diagnostics"]),
        annotations=dict(obj["annotations"]),
    )


def make_record(
    status: str,
    input_text: str,
    report: Optional[SolutionReport] = None,
    error: Optional[str] = None,
    bounds: Optional[SearchBounds] = None,
    canonical: bool = False,
) -> dict:
    """A report wrapped with status and provenance; ``canonical`` drops the timestamp."""
    from . import __version__

    rec = {
        "format": FORMAT_VERSION,
        "version": __version__,
        "status": status,
        "input": input_text,
        "bounds": None if bounds is None else bounds_to_json(bounds),
        "error": error,
        "report": None if report is None else report_to_dict(report),
    }
    if not canonical:
        rec["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return rec


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def encode_report(r: SolutionReport) -> str:
    return dumps(report_to_dict(r))


def decode_report(text: str) -> SolutionReport:
    return report_from_dict(json.loads(text))
