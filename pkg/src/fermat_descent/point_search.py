"""Bounded enumeration of rational points on Y^2 = X^p + c.

The scan runs on the integral model N^2 = M^p + k, where every affine
rational point has the shape M = a/d^2, N = b/d^p with gcd(a, d) = 1.
Such a point exists iff a^p + k*d^(2p) is a perfect square, so for each
denominator d the search is a scan over numerators a. A residue sieve
(compiled when available, numpy otherwise) discards almost every a before
the exact big-integer square test.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _sieve_np
from .arith import iroot, rational_pth_root
from .curve import INFINITY, CurveModel, CurvePoint
from .errors import BudgetExceeded

try:
    from ._sieve import sieve_range as _compiled_sieve
except ImportError:  # extension not built
    _compiled_sieve = None

if _compiled_sieve is not None and os.environ.get("FERMAT_DESCENT_BACKEND") != "numpy":
    BACKEND = "cython"
    _sieve_range = _compiled_sieve
else:
    BACKEND = "numpy"
    _sieve_range = _sieve_np.sieve_range

SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
_SQUARES = {m: frozenset(r * r % m for r in range(m)) for m in SIEVE_MODULI}
_INT64_LIMIT = 1 << 62
CHUNK = 1 << 18


@dataclass(frozen=True)
class SearchBounds:
    d_max: int = 8
    a_max: int = 10 ** 6
    time_budget: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.d_max < 1 or self.a_max < 1:
            raise ValueError("bounds must be positive")
        if self.a_max >= _INT64_LIMIT:
            raise ValueError("a_max must stay below 2**62")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")

    @classmethod
    def from_env(cls, var: str = "FERMAT_DESCENT_BOUNDS") -> SearchBounds:
        """Defaults, overridden by ``d_max,a_max`` in the environment."""
        raw = os.environ.get(var)
        if not raw:
            return cls()
        d_max, a_max = (int(s) for s in raw.split(","))
        return cls(d_max, a_max)


@dataclass
class SearchResult:
    points: list[CurvePoint]
    bounds: SearchBounds
    complete_within_bounds: bool = True
    backend: str = field(default=BACKEND, compare=False)

    @property
    def affine_points(self) -> list[CurvePoint]:
        return [pt for pt in self.points if not pt.is_infinity]


def _tables(k_d: int, p: int):
    flat, offsets, off = [], [], 0
    for m in SIEVE_MODULI:
        km = k_d % m
        sq = _SQUARES[m]
        flat.extend(1 if (pow(r, p, m) + km) % m in sq else 0 for r in range(m))
        offsets.append(off)
        off += m
    return (
        np.asarray(SIEVE_MODULI, dtype=np.int64),
        np.asarray(flat, dtype=np.uint8),
        np.asarray(offsets, dtype=np.int64),
    )


def scan_chunk(k: int, p: int, d: int, a_lo: int, a_hi: int, sieve=None) -> list[tuple[int, int]]:
    """All ``(a, b)`` with ``a_lo <= a <= a_hi``, ``gcd(a, d) = 1``, ``b >= 0``
    and ``b^2 = a^p + k d^(2p)``.

    Pure function of its arguments, so disjoint chunks can run anywhere.
    """
    sieve = sieve or _sieve_range
    k_d = k * d ** (2 * p)
    if p % 2 == 1:
        # a^p + k_d >= 0 is needed for a square
        if k_d >= 0:
            a_lo = max(a_lo, -iroot(k_d, p))
        else:
            a_lo = max(a_lo, iroot(-k_d - 1, p) + 1)
    if a_hi < a_lo:
        return []
    moduli, flat, offsets = _tables(k_d, p)
    found = []
    for a in sieve(a_lo, a_hi, moduli, flat, offsets).tolist():
        if math.gcd(a, d) != 1:
            continue
        v = a ** p + k_d
        if v < 0:
            continue
        b = math.isqrt(v)
        if b * b == v:
            found.append((a, b))
    return found


def _points_from(pairs, d: int, p: int) -> list[CurvePoint]:
    out = []
    for a, b in pairs:
        M = Fraction(a, d * d)
        N = Fraction(b, d ** p)
        X, Y = M / 4, N / 2 ** p
        out.append(CurvePoint(X, Y))
        if b:
            out.append(CurvePoint(X, -Y))
    return out


def _finish(points, bounds, complete) -> SearchResult:
    uniq = sorted(set(points) | {INFINITY}, key=CurvePoint.sort_key)
    return SearchResult(uniq, bounds, complete)


def search(m: CurveModel, bounds: SearchBounds = SearchBounds()) -> SearchResult:
    """Every rational point with integral-model coordinates
    ``M = a/d^2``, ``|a| <= a_max``, ``d <= d_max``, plus infinity.

    Points come back on the rational model, sorted with infinity first and
    then by (X, Y). Raises :class:`BudgetExceeded` carrying the partial
    result if ``bounds.time_budget`` runs out.
    """
    start = time.monotonic()
    p, k = m.p, m.integral_constant
    points: list[CurvePoint] = []
    for d in range(1, bounds.d_max + 1):
        a = -bounds.a_max
        while a <= bounds.a_max:
            hi = min(bounds.a_max, a + CHUNK - 1)
            points.extend(_points_from(scan_chunk(k, p, d, a, hi), d, p))
            a = hi + 1
            if (
                bounds.time_budget is not None
                and time.monotonic() - start > bounds.time_budget
                and (a <= bounds.a_max or d < bounds.d_max)
            ):
                raise BudgetExceeded(_finish(points, bounds, False))
    return _finish(points, bounds, True)


def search_x_axis(m: CurveModel) -> list[CurvePoint]:
    """The rational point with Y = 0, if any: X is the p-th root of -c."""
    r = rational_pth_root(-m.rational_constant, m.p)
    return [] if r is None else [CurvePoint(r, 0)]
