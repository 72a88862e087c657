from __future__ import annotations

from dataclasses import dataclass


class FermatDescentError(Exception):
    """Base class for every error raised by this package."""


@dataclass(frozen=True)
class Violation:
    """One broken constraint on an equation.

    ``kind`` is one of ``NonPrimeP``, ``ZeroCoefficient``, ``NotCoprime``,
    ``NotPowerFree``; ``subject`` names the coefficient(s) involved.
    """

    kind: str
    subject: str = ""

    def __str__(self) -> str:
        return f"{self.kind}({self.subject})" if self.subject else self.kind


class ValidationError(FermatDescentError, ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("invalid equation: " + ", ".join(map(str, self.violations)))

    @property
    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


class NotASolution(FermatDescentError, ValueError):
    pass


class ZeroCoordinate(FermatDescentError, ValueError):
    """A coordinate the construction divides by is zero (x = 0, or XY = 0)."""


class NotOnCurve(FermatDescentError, ValueError):
    pass


class BudgetExceeded(FermatDescentError):
    """The point search ran out of time; ``partial`` holds what was found."""

    def __init__(self, partial):
        self.partial = partial
        super().__init__("search time budget exceeded")
