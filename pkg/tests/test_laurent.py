"""Laurent polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ruleddt.laurent import LaurentPoly, NonPolynomialError, poly_gcd

Y = LaurentPoly({1: 1})


def test_zero_and_one():
    assert LaurentPoly.zero().is_zero()
    assert not LaurentPoly.one().is_zero()
    assert LaurentPoly({0: 0, 2: 0}).is_zero()


def test_addition_cancels():
    p = LaurentPoly({-1: 1, 2: 3})
    q = LaurentPoly({-1: -1, 2: -3})
    assert (p + q).is_zero()


def test_multiplication():
    p = LaurentPoly({1: 1, -1: 1})  # y + 1/y
    sq = p * p
    assert sq == LaurentPoly({2: 1, 0: 2, -2: 1})


def test_pow():
    p = LaurentPoly({0: 1, 1: -1})
    assert p ** 3 == LaurentPoly({0: 1, 1: -3, 2: 3, 3: -1})
    assert p ** 0 == LaurentPoly.one()


def test_shift_and_substitute():
    p = LaurentPoly({0: 1, 2: 5})
    assert p.shift(-3) == LaurentPoly({-3: 1, -1: 5})
    assert p.substitute_power(3) == LaurentPoly({0: 1, 6: 5})


def test_divexact():
    num = LaurentPoly({0: 1, 4: -1})       # 1 - y^4
    den = LaurentPoly({0: 1, 2: -1})       # 1 - y^2
    assert num.divexact(den) == LaurentPoly({0: 1, 2: 1})


def test_divexact_laurent_units():
    num = LaurentPoly({-1: 1, 3: -1})
    den = LaurentPoly({-2: 1, 0: -1})
    q = num.divexact(den)
    assert q * den == num


def test_divexact_remainder_raises():
    with pytest.raises(NonPolynomialError):
        LaurentPoly.one().divexact(LaurentPoly({0: 1, 2: -1}))


def test_gcd_basic():
    a = LaurentPoly({0: 1, 4: -1})
    b = LaurentPoly({0: 1, 2: -1})
    g = poly_gcd(a, b)
    assert g == LaurentPoly({0: -1, 2: 1}) or g == LaurentPoly({0: 1, 2: -1}) \
        or a.divexact(g) is not None


def test_gcd_ignores_units():
    a = LaurentPoly({-3: 1, -1: -1})  # y^-3 (1 - y^2)
    b = LaurentPoly({2: 1, 4: -1})    # y^2 (1 - y^2)
    g = poly_gcd(a, b)
    assert a.divexact(g) * g == a
    assert b.divexact(g) * g == b
    assert g.min_exp == 0


small_polys = st.dictionaries(st.integers(-4, 4),
                              st.fractions(min_value=-5, max_value=5),
                              max_size=4).map(LaurentPoly)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a


@given(small_polys, small_polys)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    prod = a * b
    assert prod.divexact(b) == a
