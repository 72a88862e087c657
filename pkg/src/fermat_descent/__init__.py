"""Rational solutions of A x^p + B y^p + C z^p = 0 through the attached
hyperelliptic curve Y^2 = X^p + A^2 (BC)^(p-1) / 4."""
from .curve import INFINITY, CurveModel, CurvePoint, build_curve, forward_map, is_on_curve
from .descent import SolutionReport, recover, solve, verify_consistency
from .equation import FermatEquation, Triplet, evaluate, sign_orbit, validate
from .point_search import BACKEND, SearchBounds, SearchResult, search

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INFINITY",
    "CurveModel",
    "CurvePoint",
    "FermatEquation",
    "SearchBounds",
    "SearchResult",
    "SolutionReport",
    "Triplet",
    "build_curve",
    "evaluate",
    "forward_map",
    "is_on_curve",
    "recover",
    "search",
    "sign_orbit",
    "solve",
    "validate",
    "verify_consistency",
]
