"""The equation A*x**p + B*y**p + C*z**p = 0 and its sign/ordering symmetries."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import NamedTuple, Optional

from .arith import is_prime, is_pth_power_free, rational_pth_root
from .errors import NotASolution, ValidationError, Violation


@dataclass(frozen=True)
class FermatEquation:
    A: int
    B: int
    C: int
    p: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    def __str__(self) -> str:
        p = self.p
        text = f"{self.A}*x^{p}"
        for coef, var in ((self.B, "y"), (self.C, "z")):
            text += f" {'-' if coef < 0 else '+'} {abs(coef)}*{var}^{p}"
        return text + " = 0"


@dataclass(frozen=True, order=True)
class Triplet:
    x: int
    y: int
    z: int

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __neg__(self) -> Triplet:
        return Triplet(-self.x, -self.y, -self.z)

    def scaled(self, k: int) -> Triplet:
        return Triplet(k * self.x, k * self.y, k * self.z)

    def primitive(self) -> Triplet:
        g = gcd(gcd(self.x, self.y), self.z)
        if g == 0:
            raise ValueError("the zero triplet has no primitive form")
        return Triplet(self.x // g, self.y // g, self.z // g)

    def canonical(self) -> Triplet:
        """Primitive form with the first nonzero coordinate positive."""
        t = self.primitive()
        first = next(c for c in t if c != 0)
        return t if first > 0 else -t

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


@dataclass(frozen=True)
class SignVariant:
    signs: tuple[int, int, int]
    equation: FermatEquation


class Ordering(NamedTuple):
    equation: FermatEquation
    constant: Fraction

    def signed_equations(self) -> list[FermatEquation]:
        """The 8 sign choices of this ordering; all share one curve."""
        return [v.equation for v in _variants(self.equation)]


def validate(A: int, B: int, C: int, p: int, strict: bool = True) -> FermatEquation:
    """Check the curve-correspondence preconditions and build the equation.

    Every violated constraint is collected before raising. With
    ``strict=False`` coprimality and power-freeness are not enforced, which
    is handy for exploring non-reduced coefficients.
    """
    violations = []
    if not (isinstance(p, int) and p >= 5 and is_prime(p)):
        violations.append(Violation("NonPrimeP", f"p={p}"))
    names = {"A": A, "B": B, "C": C}
    for name, value in names.items():
        if value == 0:
            violations.append(Violation("ZeroCoefficient", name))
    if strict:
        for (n1, v1), (n2, v2) in (
            (("A", A), ("B", B)), (("A", A), ("C", C)), (("B", B), ("C", C))
        ):
            if v1 and v2 and gcd(v1, v2) != 1:
                violations.append(Violation("NotCoprime", f"{n1},{n2}"))
        if not any(v.kind == "NonPrimeP" for v in violations):
            for name, value in names.items():
                if value and not is_pth_power_free(value, p):
                    violations.append(Violation("NotPowerFree", name))
    if violations:
        raise ValidationError(violations)
    return FermatEquation(A, B, C, p)


def evaluate(eq: FermatEquation, t: Triplet) -> int:
    p = eq.p
    return eq.A * t.x ** p + eq.B * t.y ** p + eq.C * t.z ** p


def is_solution(eq: FermatEquation, t: Triplet) -> bool:
    return evaluate(eq, t) == 0 and (t.x, t.y, t.z) != (0, 0, 0)


def trivial_solution_by_sum(eq: FermatEquation) -> Optional[Triplet]:
    """(1, 1, 1) whenever the coefficients sum to zero."""
    if eq.A + eq.B + eq.C == 0:
        return Triplet(1, 1, 1)
    return None


def _variants(eq: FermatEquation) -> list[SignVariant]:
    # identity first, then items (a)..(g) of the sign-flip equivalence
    order = [
        (1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1),
        (-1, -1, 1), (-1, 1, -1), (1, -1, -1), (-1, -1, -1),
    ]
    assert set(order) == set(product((1, -1), repeat=3))
    return [
        SignVariant(s, FermatEquation(s[0] * eq.A, s[1] * eq.B, s[2] * eq.C, eq.p))
        for s in order
    ]


def sign_orbit(eq: FermatEquation, t: Triplet) -> list[tuple[SignVariant, Triplet]]:
    """All 8 signed equations paired with the correspondingly signed solution.

    Flipping the sign of a coefficient and of the matching coordinate leaves
    every term unchanged because p is odd.
    """
    if not is_solution(eq, t):
        raise NotASolution(f"{t} does not solve {eq}")
    out = []
    for v in _variants(eq):
        s = v.signs
        out.append((v, Triplet(s[0] * t.x, s[1] * t.y, s[2] * t.z)))
    return out


def curve_constant(lead: int, b: int, c: int, p: int) -> Fraction:
    return Fraction(lead ** 2 * (b * c) ** (p - 1), 4)


def canonical_orderings(
    A: int, B: int, C: int, p: int, strict: bool = True
) -> list[Ordering]:
    """The three lead-coefficient choices for the set {A, B, C}.

    Orderings are (A, B, C), (B, A, C) and (C, B, A); each one, together
    with its 8 sign choices (and the B/C swap), lands on the curve with the
    returned constant.
    """
    validate(A, B, C, p, strict=strict)
    triples = [(A, B, C), (B, A, C), (C, B, A)]
    return [
        Ordering(FermatEquation(a, b, c, p), curve_constant(a, b, c, p))
        for a, b, c in triples
    ]


def degenerate_zero_coordinate_solutions(eq: FermatEquation) -> list[Triplet]:
    """Primitive solutions having exactly one zero coordinate.

    With x = 0 the equation reads (y/z)**p = -C/B, and similarly for the
    other two coordinates; two zero coordinates would force a coefficient
    to vanish.
    """
    A, B, C, p = eq.A, eq.B, eq.C, eq.p
    found = []
    u = rational_pth_root(Fraction(-C, B), p)
    if u is not None and u != 0:
        found.append(Triplet(0, u.numerator, u.denominator))
    u = rational_pth_root(Fraction(-C, A), p)
    if u is not None and u != 0:
        found.append(Triplet(u.numerator, 0, u.denominator))
    u = rational_pth_root(Fraction(-B, A), p)
    if u is not None and u != 0:
        found.append(Triplet(u.numerator, u.denominator, 0))
    return sorted({t.canonical() for t in found})
