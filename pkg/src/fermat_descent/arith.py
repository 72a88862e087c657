"""Exact integer and rational predicates: gcd, p-th roots, power-freeness.

Nothing in here touches floating point. Rationals are ``fractions.Fraction``,
which already keeps numerator/denominator in lowest terms with a positive
denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (meant for exponents)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer.

    Newton iteration on integers, seeded from above by a power of two.
    """
    if n < 0:
        raise ValueError("iroot of a negative number")
    if k < 1:
        raise ValueError("root index must be positive")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def integer_pth_root(n: int, p: int) -> Optional[int]:
    """Return ``r`` with ``r**p == n`` exactly, or ``None``.

    Negative ``n`` has a root only for odd ``p``; the root carries the sign.
    """
    if n < 0:
        if p % 2 == 0:
            return None
        r = integer_pth_root(-n, p)
        return None if r is None else -r
    r = iroot(n, p)
    return r if r ** p == n else None


def rational_pth_root(q: Fraction, p: int) -> Optional[Fraction]:
    """Exact p-th root of a rational, or ``None`` if it is irrational.

    Since ``q`` is in lowest terms, a root exists iff numerator and
    denominator are both p-th powers.
    """
    q = Fraction(q)
    num = integer_pth_root(q.numerator, p)
    if num is None:
        return None
    den = integer_pth_root(q.denominator, p)
    if den is None:
        return None
    return Fraction(num, den)


def integer_sqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_pth_power_free(n: int, p: int) -> bool:
    """True iff no prime ``q`` has ``q**p`` dividing ``n``.

    Trial division that strips each found factor completely, so the search
    bound ``d**p <= remaining`` keeps shrinking. No factorization is kept.
    """
    if n == 0:
        raise ValueError("is_pth_power_free is undefined for 0")
    m = abs(n)
    d = 2
    while d ** p <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e >= p:
                return False
        d += 1 if d == 2 else 2
    return True
