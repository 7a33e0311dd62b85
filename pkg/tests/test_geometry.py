"""Ruled-surface lattice geometry."""

from fractions import Fraction

import pytest

from ruleddt.geometry import (ChernCharacter, DivisorClass, Polarization,
                              RuledSurface, delta_of_filtration, dim_moduli,
                              discriminant, euler_pairing, euler_self,
                              is_suitable, pairing_antisym, r_delta,
                              slope_and_hilbert)


def test_intersection_numbers():
    S = RuledSurface(0, 2)
    C, f = S.section(), S.fiber()
    assert S.intersect(C, C) == -2
    assert S.intersect(f, f) == 0
    assert S.intersect(C, f) == 1
    S11 = RuledSurface(1, 1)
    D = DivisorClass(1, 2)  # C + 2f
    assert S11.intersect(D, D) == 3


def test_canonical_class():
    S = RuledSurface(0, 0)
    assert S.canonical_class == DivisorClass(-2, -2)
    assert RuledSurface(2, 1).canonical_class == DivisorClass(-2, 1)


def test_euler_pairing_structure_sheaf():
    S = RuledSurface(0, 0)
    o = ChernCharacter(S, 1, 0, 0, 0)
    assert euler_pairing(S, o, o) == 1  # chi(O_S)


def test_euler_self_via_discriminant():
    S = RuledSurface(0, 3)
    gamma = ChernCharacter(S, 2, 0, 0, 2)
    assert discriminant(gamma) == 1
    assert euler_self(S, gamma) == -4
    assert euler_self(S, gamma) == gamma.r ** 2 * (S.chi_O - 2 * discriminant(gamma))


def test_antisym_is_skew_pairing_with_canonical():
    S = RuledSurface(1, 2)
    a = ChernCharacter(S, 2, 1, -3, Fraction(5, 2))
    b = ChernCharacter(S, 3, -2, 1, 4)
    skew = a.gamma1.scale(b.r) - b.gamma1.scale(a.r)
    assert pairing_antisym(S, a, b) == S.intersect(skew, S.canonical_class)
    assert euler_pairing(S, a, b) - euler_pairing(S, b, a) == pairing_antisym(S, a, b)


def test_antisym_vanishes_for_proportional():
    S = RuledSurface(2, 1)
    a = ChernCharacter(S, 1, 2, -1, 0)
    b = ChernCharacter(S, 2, 4, -2, 7)
    assert pairing_antisym(S, a, b) == 0


def test_discriminant_values():
    S = RuledSurface(0, 0)
    assert discriminant(ChernCharacter(S, 2, 0, 0, 2)) == 1
    assert discriminant(ChernCharacter(S, 3, 0, 0, 3)) == 1
    # a line bundle: c2 = 0 and gamma_2 = c1^2/2
    line = ChernCharacter(S, 1, 3, -2, 0)
    assert discriminant(line) == 0


def test_twist_invariance():
    S = RuledSurface(1, 1)
    gamma = ChernCharacter(S, 2, 1, 1, Fraction(7, 2))
    for L in (DivisorClass(1, 0), DivisorClass(0, 1), DivisorClass(-2, 3)):
        assert discriminant(gamma.twist(L)) == discriminant(gamma)


def test_filtration_single_and_proportional():
    S = RuledSurface(0, 1)
    a = ChernCharacter(S, 2, 0, 0, 3)
    assert delta_of_filtration([a]) == r_delta(a)
    b1 = ChernCharacter(S, 1, 1, 0, 2)
    b2 = ChernCharacter(S, 1, 1, 0, 1)
    # equal first Chern data: the correction term vanishes
    assert delta_of_filtration([b1, b2]) == r_delta(b1) + r_delta(b2)


def test_filtration_matches_direct_discriminant():
    S = RuledSurface(0, 0)
    p1 = ChernCharacter(S, 1, 1, 1, 2)   # gamma1 = C - f
    p2 = ChernCharacter(S, 1, -1, -1, 1)
    total_g2 = p1.gamma2 + p2.gamma2
    total = ChernCharacter(S, 2, 0, 0, -total_g2)
    assert delta_of_filtration([p1, p2]) == r_delta(total)


def test_slope_and_hilbert():
    S = RuledSurface(0, 0)
    J = Polarization.mixed(1, 1)
    gamma = ChernCharacter(S, 2, 0, 0, 1)
    mu, (lead, lin, const) = slope_and_hilbert(S, gamma, J)
    assert mu == 0
    Jdiv = J.divisor(S)
    assert lead == Fraction(S.intersect(Jdiv, Jdiv), 2)
    # proportional classes share the reduced Hilbert polynomial
    double = ChernCharacter(S, 4, 0, 0, 2)
    assert slope_and_hilbert(S, double, J)[1] == (lead, lin, const)


def test_dim_moduli():
    S = RuledSurface(0, 2)
    assert dim_moduli(S, ChernCharacter(S, 2, 0, 0, 2)) == 5
    assert dim_moduli(S, ChernCharacter(S, 3, 0, 0, 3)) == 10
    # a line bundle on a rational surface: a point
    assert dim_moduli(S, ChernCharacter(S, 1, 0, 0, 0)) == 0
    with pytest.raises(ValueError):
        dim_moduli(S, ChernCharacter(S, 2, 0, 0, 0))  # dim would be -3


def test_suitability():
    S = RuledSurface(0, 0)
    gamma = ChernCharacter(S, 2, 0, 0, 2)
    ok, witness = is_suitable(S, Polarization.mixed(1, 5), gamma)
    assert ok and witness is None
    bad, xi = is_suitable(S, Polarization.mixed(2, 1), gamma)
    assert not bad
    assert xi is not None and S.intersect(xi, xi) < 0
    # the symbolic suitable polarization is suitable by construction
    assert is_suitable(S, Polarization.suitable(), gamma) == (True, None)


def test_suitability_bogomolov_window():
    """The wall window scales with the discriminant: at Delta = 0 no wall
    class fits and every ample J qualifies, while any positive Delta on
    this lattice admits C - f as a wall witness against J(6,5)."""
    S = RuledSurface(1, 0)
    J = Polarization.mixed(6, 5)
    ok, _ = is_suitable(S, J, ChernCharacter(S, 2, 0, 0, 0))
    assert ok
    bad, xi = is_suitable(S, J, ChernCharacter(S, 2, 0, 0, 1))
    assert not bad
    assert xi in (DivisorClass(1, -1), DivisorClass(-1, 1))
    # the witness really does separate the fiber ray from J
    assert xi.cC * S.intersect(xi, J.divisor(S)) <= 0 and S.intersect(xi, xi) < 0


def test_polarization_validation():
    with pytest.raises(ValueError):
        Polarization.mixed(0, 1)
    with pytest.raises(ValueError):
        Polarization.anticanonical().validate_for(RuledSurface(1, 0))
    Polarization.anticanonical().validate_for(RuledSurface(0, 1))
    assert Polarization.anticanonical().resolve(RuledSurface(0, 1)) == \
        Polarization.mixed(2, 1)


def test_suitable_slope_is_lexicographic():
    S = RuledSurface(0, 0)
    J = Polarization.suitable()
    # equal fiber slope: the eps part breaks the tie
    assert J.slope(1, 1, 0, S) > J.slope(1, 1, 2, S)
    assert J.slope(1, 0, 0, S) < J.slope(1, 1, 5, S)
