import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fermat_descent.equation import (
    FermatEquation,
    Triplet,
    canonical_orderings,
    degenerate_zero_coordinate_solutions,
    evaluate,
    sign_orbit,
    trivial_solution_by_sum,
    validate,
)
from fermat_descent.errors import NotASolution, ValidationError
from conftest import EX2, EX3, SOL2, SOL3


def test_validate_accepts_paper_set():
    assert validate(2, 9, 11, 5) == FermatEquation(2, 9, 11, 5)


@pytest.mark.parametrize(
    "args,kind,subject",
    [
        ((2, 9, 11, 4), "NonPrimeP", "p=4"),
        ((2, 9, 11, 3), "NonPrimeP", "p=3"),
        ((2, 4, 11, 5), "NotCoprime", "A,B"),
        ((32, 9, 11, 5), "NotPowerFree", "A"),
        ((0, 9, 11, 5), "ZeroCoefficient", "A"),
    ],
)
def test_validate_rejections(args, kind, subject):
    with pytest.raises(ValidationError) as info:
        validate(*args)
    assert any(v.kind == kind and v.subject == subject for v in info.value.violations)


def test_validate_lists_every_violation():
    with pytest.raises(ValidationError) as info:
        validate(64, 4, 0, 5)
    assert info.value.kinds == {"NotCoprime", "NotPowerFree", "ZeroCoefficient"}


def test_lenient_skips_reduction_checks():
    assert validate(32, 4, 11, 5, strict=False).A == 32
    with pytest.raises(ValidationError):
        validate(32, 4, 11, 4, strict=False)


def test_negative_coefficients_are_valid():
    validate(-2, 9, -11, 5)


@pytest.mark.parametrize(
    "eq,t,value",
    [
        (EX2, Triplet(1, 1, -1), 0),
        (EX3, Triplet(1, -1, -1), 0),
        (EX2, Triplet(1, 1, 1), 22),
    ],
)
def test_evaluate(eq, t, value):
    assert evaluate(eq, t) == value


@pytest.mark.parametrize(
    "eq,expected",
    [
        (FermatEquation(1, 2, -3, 5), Triplet(1, 1, 1)),
        (FermatEquation(2, 9, -11, 5), Triplet(1, 1, 1)),
        (FermatEquation(2, 9, 11, 5), None),
    ],
)
def test_trivial_solution_by_sum(eq, expected):
    got = trivial_solution_by_sum(eq)
    assert got == expected
    if got is not None:
        assert evaluate(eq, got) == 0


def test_sign_orbit_paper_items():
    orbit = {v.signs: (v.equation, t) for v, t in sign_orbit(EX2, SOL2)}
    assert len(orbit) == 8
    assert orbit[(1, 1, 1)] == (EX2, SOL2)
    assert orbit[(-1, 1, 1)] == (FermatEquation(-2, 9, 11, 5), Triplet(-1, 1, -1))
    assert orbit[(-1, -1, -1)] == (FermatEquation(-2, -9, -11, 5), Triplet(-1, -1, 1))


def test_sign_orbit_requires_solution():
    with pytest.raises(NotASolution):
        sign_orbit(EX2, Triplet(1, 1, 1))


@given(
    st.sampled_from([(EX2, SOL2), (EX3, SOL3)]),
    st.integers(-50, 50).filter(bool),
)
def test_sign_orbit_soundness(case, lam):
    eq, t = case
    pairs = sign_orbit(eq, t.scaled(lam))
    assert len(pairs) == 8
    assert len({v.signs for v, _ in pairs}) == 8
    for v, tt in pairs:
        assert evaluate(v.equation, tt) == 0
        assert v.equation.coefficients == tuple(s * c for s, c in zip(v.signs, eq.coefficients))
        assert tuple(tt) == tuple(s * c for s, c in zip(v.signs, t.scaled(lam)))


def test_canonical_orderings_constants():
    orderings = canonical_orderings(2, 9, 11, 5)
    leads = {o.equation.A: o.constant for o in orderings}
    assert leads == {2: 96059601, 9: 4743684, 11: 3175524}
    assert leads[9] == Fraction(81 * 22 ** 4, 4)
    assert leads[11] == Fraction(121 * 18 ** 4, 4)


@pytest.mark.parametrize("abc", [(2, 9, 11), (16, 9, 7), (123, 125, 121)])
def test_canonical_orderings_distinct(abc):
    constants = [o.constant for o in canonical_orderings(*abc, 5)]
    assert len(set(constants)) == 3


def test_each_ordering_covers_eight_signed_equations():
    for o in canonical_orderings(2, 9, 11, 5):
        signed = o.signed_equations()
        assert len(set(signed)) == 8
        assert {abs(e.A) for e in signed} == {abs(o.equation.A)}


def test_canonical_orderings_propagates_validation():
    with pytest.raises(ValidationError):
        canonical_orderings(2, 4, 11, 5)


@pytest.mark.parametrize(
    "eq,expected",
    [
        (FermatEquation(2, 9, 11, 5), []),
        (FermatEquation(5, 1, 1, 5), [Triplet(0, 1, -1)]),
        (FermatEquation(7, 32, -1, 5), [Triplet(0, 1, 2)]),
        (FermatEquation(1, 1, 5, 5), [Triplet(1, -1, 0)]),
    ],
)
def test_degenerate_solutions(eq, expected):
    got = degenerate_zero_coordinate_solutions(eq)
    assert got == expected
    for t in got:
        assert evaluate(eq, t) == 0


def test_degenerate_solutions_against_box_scan():
    rng = random.Random(7)
    for _ in range(40):
        A, B, C = (rng.choice([-1, 1]) * rng.choice([1, 2, 3, 32, 243, 7]) for _ in range(3))
        eq = FermatEquation(A, B, C, 5)
        box = set()
        for x in range(-3, 4):
            for y in range(-3, 4):
                for z in range(-3, 4):
                    t = Triplet(x, y, z)
                    if (x, y, z) != (0, 0, 0) and (x * y * z == 0) and evaluate(eq, t) == 0:
                        if sum(c == 0 for c in t) == 1:
                            box.add(t.canonical())
        assert set(degenerate_zero_coordinate_solutions(eq)) == box


def test_triplet_canonical_and_primitive():
    assert Triplet(-2, -2, 2).canonical() == Triplet(1, 1, -1)
    assert Triplet(0, -3, 6).canonical() == Triplet(0, 1, -2)
    assert Triplet(4, -6, 2).primitive() == Triplet(2, -3, 1)
    with pytest.raises(ValueError):
        Triplet(0, 0, 0).primitive()
