"""The hyperelliptic curve Y^2 = X^p + A^2 (BC)^(p-1) / 4 attached to an equation.

Two models are kept side by side:

* the rational model ``Y^2 = X^p + c`` with ``c`` possibly a quarter-integer,
* the integral model ``N^2 = M^p + k`` obtained through
  ``(M, N) = (4X, 2^p Y)``, so ``k = 4^p c = A^2 (4BC)^(p-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .equation import FermatEquation, Triplet, evaluate, curve_constant
from .errors import NotASolution, NotOnCurve, ZeroCoordinate


@dataclass(frozen=True)
class CurvePoint:
    """Affine point with exact rational coordinates, or the point at infinity.

    Infinity is stored with both coordinates ``None``; use :data:`INFINITY`.
    """

    X: Optional[Fraction] = None
    Y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.X is None) != (self.Y is None):
            raise ValueError("give both coordinates or neither")
        if self.X is not None:
            object.__setattr__(self, "X", Fraction(self.X))
            object.__setattr__(self, "Y", Fraction(self.Y))

    @property
    def is_infinity(self) -> bool:
        return self.X is None

    def negate(self) -> CurvePoint:
        return self if self.is_infinity else CurvePoint(self.X, -self.Y)

    def sort_key(self):
        return (0, 0, 0) if self.is_infinity else (1, self.X, self.Y)

    def __str__(self) -> str:
        if self.is_infinity:
            return "(1 : 0 : 0)"
        return f"({self.X} : {self.Y} : 1)"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class CurveModel:
    p: int
    rational_constant: Fraction
    integral_constant: int
    equation: Optional[FermatEquation] = None

    @property
    def genus(self) -> int:
        return (self.p - 1) // 2

    @classmethod
    def from_constant(cls, c, p: int) -> CurveModel:
        """Bare curve ``Y^2 = X^p + c``; ``4^p * c`` must be an integer."""
        c = Fraction(c)
        k = c * 4 ** p
        if k.denominator != 1:
            raise ValueError(f"4^p * c is not integral for c = {c}")
        return cls(p, c, int(k))

    def __str__(self) -> str:
        return f"Y^2 = X^{self.p} + {self.rational_constant}"


def build_curve(eq: FermatEquation) -> CurveModel:
    A, B, C, p = eq.A, eq.B, eq.C, eq.p
    c = curve_constant(A, B, C, p)
    k = A ** 2 * (4 * B * C) ** (p - 1)
    assert c * 4 ** p == k
    return CurveModel(p, c, k, eq)


def is_on_curve(pt: CurvePoint, m: CurveModel) -> bool:
    if pt.is_infinity:
        return True
    return pt.Y ** 2 == pt.X ** m.p + m.rational_constant


def is_on_integral_model(pt: CurvePoint, m: CurveModel) -> bool:
    if pt.is_infinity:
        return True
    return pt.Y ** 2 == pt.X ** m.p + m.integral_constant


def to_integral(pt: CurvePoint, m: CurveModel) -> CurvePoint:
    """Map ``(X, Y)`` to ``(M, N) = (4X, 2^p Y)`` on ``N^2 = M^p + k``."""
    if not is_on_curve(pt, m):
        raise NotOnCurve(f"{pt} is not on {m}")
    if pt.is_infinity:
        return INFINITY
    return CurvePoint(4 * pt.X, 2 ** m.p * pt.Y)


def from_integral(pt: CurvePoint, m: CurveModel) -> CurvePoint:
    if not is_on_integral_model(pt, m):
        raise NotOnCurve(f"{pt} is not on N^2 = M^{m.p} + {m.integral_constant}")
    if pt.is_infinity:
        return INFINITY
    return CurvePoint(pt.X / 4, pt.Y / 2 ** m.p)


def forward_map(eq: FermatEquation, t: Triplet) -> CurvePoint:
    """Send a solution with x != 0 to its point on the attached curve.

    X = -BCyz / x^2,  Y = (-BC)^((p-1)/2) (B y^p - C z^p) / (2 x^p).
    The map is homogeneous of degree 0, so scaled triplets share a point.
    """
    if evaluate(eq, t) != 0:
        raise NotASolution(f"{t} does not solve {eq}")
    if t.x == 0:
        raise ZeroCoordinate("forward map needs x != 0")
    B, C, p = eq.B, eq.C, eq.p
    x, y, z = t
    X = Fraction(-B * C * y * z, x ** 2)
    Y = Fraction((-B * C) ** ((p - 1) // 2) * (B * y ** p - C * z ** p), 2 * x ** p)
    return CurvePoint(X, Y)
