"""Plethystic calculus on graded series."""

import random
from fractions import Fraction

import pytest

from ruleddt.graded import GradedSeries, adams, mobius, plethystic_exp, plethystic_log
from ruleddt.identity import _random_graded
from ruleddt.laurent import LaurentPoly
from ruleddt.ratfunc import RatFunc
from ruleddt.series import TSeries


@pytest.mark.parametrize("n,value", [
    (1, 1), (2, -1), (3, -1), (4, 0), (5, -1), (6, 1), (12, 0), (30, -1), (36, 0),
])
def test_mobius(n, value):
    assert mobius(n) == value


def test_mobius_rejects_nonpositive():
    with pytest.raises(ValueError):
        mobius(0)


def point_class(K=4, rank_bound=4):
    g = GradedSeries(rank_bound, K)
    g.terms[(1, 0, 0)] = TSeries.one(K)
    return g


def test_exp_of_point_class():
    """Exp(z) = 1 + z + z^2 + ... with unit coefficients."""
    e = plethystic_exp(point_class())
    for r in range(0, 5):
        assert e.component((r, 0, 0)) == TSeries.one(4)


def test_log_inverts_point_class_exp():
    e = plethystic_exp(point_class())
    assert plethystic_log(e) == point_class()


def test_exp_rejects_constant_term():
    g = GradedSeries.one(2, 2)
    with pytest.raises(ValueError):
        plethystic_exp(g)
    with pytest.raises(ValueError):
        plethystic_log(GradedSeries.zero(2, 2))


def test_exp_second_symmetric_power():
    """The z^2 coefficient of Exp(c z) is (c(y)^2 + c(y^2))/2."""
    c = RatFunc(LaurentPoly({1: 1}), LaurentPoly({0: 1, 2: -1}))  # y/(1-y^2)
    g = GradedSeries(2, 0)
    g.terms[(1, 0, 0)] = TSeries.constant(c, 0)
    e = plethystic_exp(g)
    expect = (c * c + c.substitute_power(2)) * Fraction(1, 2)
    assert e.component((2, 0, 0)).coefficient(0) == expect


def test_log_of_one_plus_z():
    g = GradedSeries.one(3, 0)
    g.terms[(1, 0, 0)] = TSeries.one(0)
    lg = plethystic_log(g)
    assert lg.component((1, 0, 0)).coefficient(0) == RatFunc.one()
    # z^2 coefficient: -(1 + psi_2(1))/2 by the Moebius formula
    assert lg.component((2, 0, 0)).coefficient(0) == RatFunc.monomial(-1)


def test_adams_on_graded_scales_keys():
    g = GradedSeries(4, 4)
    g.terms[(1, 1, -1)] = TSeries(4, coeffs={1: RatFunc.monomial(1, 1)})
    g2 = adams(g, 2)
    assert set(g2.terms) == {(2, 2, -2)}
    assert g2.component((2, 2, -2)).coefficient(2) == RatFunc.monomial(1, 2)


def test_adams_composition_random():
    rng = random.Random(11)
    for _ in range(20):
        g = _random_graded(rng, 4, 3)
        assert adams(adams(g, 2), 2) == adams(g, 4)
        assert adams(adams(g, 3), 2) == adams(g, 6)


def test_exp_log_roundtrip_random():
    rng = random.Random(5)
    for _ in range(15):
        f = _random_graded(rng, 3, 3)
        assert plethystic_log(plethystic_exp(f)) == f


def test_exp_is_multiplicative():
    rng = random.Random(17)
    for _ in range(10):
        f = _random_graded(rng, 3, 2)
        g = _random_graded(rng, 3, 2)
        assert plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g)


def test_adams_is_ring_homomorphism():
    rng = random.Random(23)
    for _ in range(10):
        f = _random_graded(rng, 3, 3)
        g = _random_graded(rng, 3, 3)
        assert adams(f * g, 2) == adams(f, 2) * adams(g, 2)
        assert adams(f + g, 3) == adams(f, 3) + adams(g, 3)
