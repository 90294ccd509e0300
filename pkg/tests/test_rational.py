import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmahler import (
    DomainError,
    ReducedRational,
    invert,
    mahler_measure,
    multiply,
    parse_rational,
    reduce,
)

nonzero_ints = st.integers(min_value=-(10**6), max_value=10**6).filter(lambda n: n != 0)


def test_reduce_cancels_gcd():
    assert reduce(14, 60) == ReducedRational(7, 30)


def test_reduce_identity():
    assert reduce(7, 30) == ReducedRational(7, 30)


def test_reduce_sign_normalization():
    assert reduce(-6, -4) == ReducedRational(3, 2)
    assert reduce(6, -4) == ReducedRational(-3, 2)


@pytest.mark.parametrize("p,q", [(0, 5), (5, 0), (0, 0)])
def test_reduce_rejects_zero(p, q):
    with pytest.raises(DomainError):
        reduce(p, q)


def test_reduce_rejects_oversized():
    with pytest.raises(DomainError):
        reduce(2**63, 1)


def test_invariant_enforced_on_construction():
    with pytest.raises(DomainError):
        ReducedRational(2, 4)
    with pytest.raises(DomainError):
        ReducedRational(1, -2)


def test_parse():
    assert parse_rational("7/30") == ReducedRational(7, 30)
    assert parse_rational("-7/30") == ReducedRational(-7, 30)
    assert parse_rational("5") == ReducedRational(5, 1)
    assert parse_rational("4/6") == ReducedRational(2, 3)
    assert parse_rational("7/-2") == ReducedRational(-7, 2)


@pytest.mark.parametrize("text", ["0", "7/0", "", "x", "1.5", "1/2/3"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        parse_rational(text)


def test_mahler_measure_values():
    assert mahler_measure(reduce(7, 30)) == pytest.approx(math.log(30), abs=1e-15)
    assert mahler_measure(reduce(1, 1)) == 0.0
    assert mahler_measure(reduce(-2, 1)) == pytest.approx(math.log(2), abs=1e-15)


@given(nonzero_ints, nonzero_ints)
def test_mahler_measure_symmetries(p, q):
    a = reduce(p, q)
    assert mahler_measure(a) == mahler_measure(invert(a))
    assert mahler_measure(a) == mahler_measure(reduce(-p, q))


@given(nonzero_ints, nonzero_ints)
def test_mahler_measure_zero_iff_unit(p, q):
    a = reduce(p, q)
    if a.is_unit:
        assert mahler_measure(a) == 0.0
    else:
        assert mahler_measure(a) >= math.log(2) - 1e-15


@given(nonzero_ints, nonzero_ints, nonzero_ints, nonzero_ints)
def test_multiply_matches_fractions(p1, q1, p2, q2):
    from fractions import Fraction

    prod = Fraction(p1, q1) * Fraction(p2, q2)
    if prod != 0:
        got = multiply(reduce(p1, q1), reduce(p2, q2))
        assert (got.numerator, got.denominator) == (
            prod.numerator,
            prod.denominator,
        )
