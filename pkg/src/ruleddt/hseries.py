"""Generating functions of stack invariants on a ruled surface.

H(r, gamma_1) collects the invariants of the stacks of slope-semistable
sheaves of rank r and first Chern class gamma_1, graded by t^(r*Delta).
At the boundary polarization f the series has an explicit infinite
product form; it also equals the bundle-stack expression built from the
curve's zeta function, and both routes are implemented so they can be
checked against each other.  At the suitable polarization the series is
a finite sum over compositions of r with explicit rational-function
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Polarization, RuledSurface
from .laurent import LaurentPoly
from .ratfunc import RatFunc, one_minus_y_power
from .series import TSeries


class PoleError(ArithmeticError):
    """Raised when a zeta-function argument sits on a pole at t^0."""


def zeta_curve(g, arg_y_exp, arg_t_exp, K, q=1):
    """Truncated expansion of Z(y^arg_y_exp * t^arg_t_exp) for a genus-g curve.

    Z(x) = (1 - y x)^{2g} / ((1 - x)(1 - y^2 x)).
    """
    if arg_t_exp < 0:
        raise ValueError("t-exponent of the argument must be >= 0")
    if arg_t_exp == 0:
        return TSeries.constant(zeta_curve_ratfunc(g, arg_y_exp), K, q)
    s = TSeries.one(K, q)
    e = Fraction(arg_t_exp)
    s = s.mul_one_minus_monomial(arg_y_exp + 1, e, 2 * g)
    s = s.mul_one_minus_monomial(arg_y_exp, e, -1)
    s = s.mul_one_minus_monomial(arg_y_exp + 2, e, -1)
    return s


def zeta_curve_ratfunc(g, arg_y_exp):
    """Z(y^arg_y_exp) as an exact rational function of y."""
    if arg_y_exp == 0 or arg_y_exp == -2:
        raise PoleError(f"zeta argument y^{arg_y_exp} hits a pole at t^0")
    num = one_minus_y_power(arg_y_exp + 1) ** (2 * g)
    den = one_minus_y_power(arg_y_exp) * one_minus_y_power(arg_y_exp + 2)
    return num / den


def bun_poincare(g, r):
    """Poincare series of the stack of degree-zero rank-r bundles on the curve."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    out = RatFunc(one_minus_y_power(1).num ** (2 * g),
                  LaurentPoly({2: 1, 0: -1}))  # (1-y)^{2g} / (y^2 - 1)
    for i in range(1, r):
        out = out * zeta_curve_ratfunc(g, 2 * i)
    return out


@dataclass
class HSeries:
    """A stack-invariant generating series at fixed (rank, gamma_1).

    The series variable is t with exponent r*Delta; coefficients are
    rational functions of y.
    """

    surface: RuledSurface
    r: int
    beta: int
    alpha: int
    polarization: Polarization
    series: TSeries

    def coefficient_c2(self, c2):
        """Coefficient at second Chern class c2 (t-exponent r*Delta)."""
        idx = self.t_exponent_of_c2(c2)
        if idx < 0 or idx > self.series.order:
            return RatFunc.zero()
        return self.series.coefficient(idx)

    def t_exponent_of_c2(self, c2):
        g1_sq = (-self.surface.d) * self.beta ** 2 - 2 * self.alpha * self.beta
        return Fraction(c2) - Fraction(self.r - 1, 2 * self.r) * g1_sq


def _boundary_prefactor(g, r):
    e = -(r * r) * (1 - g)
    return RatFunc.monomial(Fraction((-1) ** (r * r * (1 - g) % 2)), e)


def _boundary_t0_constant(g, r):
    """The t^0 part of the boundary product (all factors with t-exponent 0)."""
    out = one_minus_y_power(-2 * r + 1) ** (2 * g) / one_minus_y_power(-2 * r)
    for k in range(1, r):
        out = out * (one_minus_y_power(-2 * k + 1) ** (2 * g)
                     / one_minus_y_power(-2 * k) ** 2)
    return out


def H_boundary(S, r, gamma1, K, q=1):
    """Boundary-polarization series from the infinite product formula.

    Vanishes identically unless gamma_1 . f = 0 (mod r).
    """
    beta, alpha = gamma1
    if beta % r:
        return HSeries(S, r, beta, alpha, Polarization.boundary(),
                       TSeries.zero(K, q))
    g = S.g
    series = TSeries.constant(_boundary_prefactor(g, r) * _boundary_t0_constant(g, r),
                              K, q)
    kmax_t = int(Fraction(K))
    for j in range(1, kmax_t + 1):
        e = Fraction(j)
        # factors contributed with t-exponent j by the n = j+1 and n = j slices
        series = series.mul_one_minus_monomial(-2 * r + 1, e, 2 * g)
        series = series.mul_one_minus_monomial(-2 * r, e, -1)
        series = series.mul_one_minus_monomial(2 * r - 1, e, 2 * g)
        series = series.mul_one_minus_monomial(2 * r, e, -1)
        series = series.mul_one_minus_monomial(0, e, -2)
        for k in range(1, r):
            series = series.mul_one_minus_monomial(-2 * k + 1, e, 2 * g)
            series = series.mul_one_minus_monomial(-2 * k, e, -2)
            series = series.mul_one_minus_monomial(2 * k - 1, e, 2 * g)
            series = series.mul_one_minus_monomial(2 * k, e, -2)
    return HSeries(S, r, beta, alpha, Polarization.boundary(), series)


def H_boundary_stack_form(S, r, gamma1, K, q=1):
    """Boundary-polarization series from the bundle-stack expression.

    An independent evaluation route: the Poincare series of the stack of
    degree-zero bundles on the base curve times a product of shifted
    curve zeta factors.  Must agree with H_boundary term by term.
    """
    beta, alpha = gamma1
    if beta % r:
        return HSeries(S, r, beta, alpha, Polarization.boundary(),
                       TSeries.zero(K, q))
    g = S.g
    e = (r * r) * (1 - g)
    pref = RatFunc.monomial(Fraction((-1) ** (r * r * (1 - g) % 2)), e) * bun_poincare(g, r)
    series = TSeries.constant(pref, K, q)
    kmax_t = int(Fraction(K))
    for k in range(1, kmax_t + 1):
        for i in range(-r, r):
            series = series * zeta_curve(g, 2 * i, k, K, q)
    return HSeries(S, r, beta, alpha, Polarization.boundary(), series)


def compositions(r):
    """All ordered tuples of positive integers summing to r."""
    if r == 0:
        return [()]
    out = []
    for first in range(1, r + 1):
        for rest in compositions(r - first):
            out.append((first,) + rest)
    return out


def suitable_composition_factor(r, alpha, comp):
    """Rational-function weight of one composition in the suitable resummation.

    For the composition (r_1, ..., r_l) of r the weight is
    y^(2 sum_i (r_i + r_{i-1}) {alpha/r * tail_i}) / prod_i (1 - y^(2(r_i + r_{i-1})))
    with {x} the fractional part and tail_i = r_i + ... + r_l.
    """
    exp = Fraction(0)
    den = RatFunc.one()
    tail = r
    for i in range(1, len(comp)):
        tail -= comp[i - 1]
        step = 2 * (comp[i] + comp[i - 1])
        frac = Fraction(alpha * tail, r)
        frac = frac - (frac.numerator // frac.denominator)
        exp += step * frac
        den = den * one_minus_y_power(step)
    if exp.denominator != 1:
        raise ArithmeticError(f"non-integral y-exponent {exp} in composition weight")
    return RatFunc.monomial(1, int(exp)) / den


def H_suitable(S, r, gamma1, K, q=1, boundary_cache=None):
    """Suitable-polarization series as a sum over compositions of r.

    Vanishes unless gamma_1 . f = 0 (mod r); only alpha mod r enters the
    weights, matching invariance under line-bundle twists.
    """
    beta, alpha = gamma1
    if beta % r:
        return HSeries(S, r, beta, alpha, Polarization.suitable(),
                       TSeries.zero(K, q))
    cache = boundary_cache if boundary_cache is not None else {}

    def H(j):
        key = (j, q)
        if key not in cache:
            cache[key] = H_boundary(S, j, (0, 0), K, q).series
        return cache[key]

    total = TSeries.zero(K, q)
    for comp in compositions(r):
        weight = suitable_composition_factor(r, alpha, comp)
        prod = TSeries.constant(weight, K, q)
        for rj in comp:
            prod = prod * H(rj)
        total = total + prod
    return HSeries(S, r, beta, alpha, Polarization.suitable(), total)
