"""From stack series to intersection-cohomology Betti numbers.

The pipeline: stack series H -> rational invariants h (log-type finite
sum over same-slope decompositions) -> integer DT invariants (Moebius
inversion with the (y^-1 - y) prefactor) -> per-class Laurent
polynomials -> Betti numbers after the (-y)^dim shift.  Every extracted
coefficient must be an honest Laurent polynomial with nonnegative,
palindromic integer coefficients; any violation raises an alarm rather
than producing output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import ChernCharacter, Polarization, dim_moduli
from .graded import GradedSeries, mobius
from .hseries import HSeries, H_boundary, compositions
from .laurent import LaurentPoly, NonPolynomialError
from .ratfunc import RatFunc
from .series import TSeries


class BettiAlarmError(ArithmeticError):
    """A structural invariant of the extracted invariants failed."""


def h_from_H(h_inputs, r, gamma1, K):
    """Rational-invariant series from stack series at a fixed slope.

    ``h_inputs`` maps rank r' -> HSeries for the classes (r', r'/r * gamma1)
    on the slope ray through (r, gamma1).  Two evaluation routes are
    computed -- the finite decomposition sum and the formal logarithm of
    the rank-graded series -- and must agree.
    """
    beta, alpha = gamma1
    direct = _h_decomposition_sum(h_inputs, r, beta, alpha)
    via_log = _h_log_route(h_inputs, r, beta, alpha)
    if direct != via_log:
        raise BettiAlarmError("decomposition sum and log route disagree")
    base = h_inputs[r]
    return HSeries(base.surface, r, beta, alpha, base.polarization, direct)


def _ray_part(r, beta, alpha, rp):
    """(beta', alpha') of the slope-ray class at rank r', or None off-lattice."""
    bp = Fraction(beta * rp, r)
    ap = Fraction(alpha * rp, r)
    if bp.denominator != 1 or ap.denominator != 1:
        return None
    return int(bp), int(ap)


def _h_decomposition_sum(h_inputs, r, beta, alpha):
    total = None
    for comp in compositions(r):
        parts = [_ray_part(r, beta, alpha, rp) for rp in comp]
        if any(p is None for p in parts):
            continue
        ell = len(comp)
        prod = None
        for rp in comp:
            s = h_inputs[rp].series
            prod = s if prod is None else prod * s
        term = prod * Fraction((-1) ** (ell - 1), ell)
        total = term if total is None else total + term
    return total


def _h_log_route(h_inputs, r, beta, alpha):
    sample = h_inputs[r].series
    one = GradedSeries.one(r, sample.order, sample.q)
    acc = one
    for rp, hs in h_inputs.items():
        part = _ray_part(r, beta, alpha, rp)
        if part is None:
            continue
        g = GradedSeries(r, sample.order, sample.q,
                         {(rp, part[0], part[1]): hs.series})
        acc = acc + g
    return acc.log().component((r, beta, alpha))


def omega_from_h(h_by_rank, r, gamma1, K, mobius_fn=mobius):
    """DT generating series by Moebius inversion over divisors of the class.

    h_by_rank maps r' -> HSeries of rational invariants for (r', gamma1 * r'/r);
    only r' = r/m for m dividing gcd(r, beta, alpha) are consulted.
    ``mobius_fn`` exists as a test hook for the inversion round-trip.
    """
    beta, alpha = gamma1
    base = h_by_rank[r]
    prefactor = RatFunc(LaurentPoly({-1: 1, 1: -1}))  # y^-1 - y
    total = TSeries(base.series.order, base.series.q)
    for m in _divisors(gcd(r, gcd(abs(beta), abs(alpha))) or r):
        mu = mobius_fn(m)
        if not mu:
            continue
        sub = h_by_rank[r // m].series.adams(m)
        total = total + sub * Fraction(mu, m)
    return HSeries(base.surface, r, beta, alpha, base.polarization,
                   total * prefactor)


def omega_inverse_check(omega, h_by_rank, r, gamma1):
    """Reconstruct the rational-invariant series from the DT series.

    Returns True when sum_m (1/m) psi_m(Omega-series_{r/m}) / (y^-m - y^m)
    recovers h exactly; ``omega`` maps rank -> Omega HSeries.
    """
    beta, alpha = gamma1
    base = h_by_rank[r].series
    total = TSeries(base.order, base.q)
    for m in _divisors(gcd(r, gcd(abs(beta), abs(alpha))) or r):
        series = omega[r // m].series.adams(m)
        den = RatFunc(LaurentPoly({-m: 1, m: -1}))
        total = total + series * (den.inverse() * Fraction(1, m))
    return total == base


def _divisors(n):
    return [m for m in range(1, n + 1) if n % m == 0]


@dataclass
class OmegaResult:
    """Betti data of one moduli space.

    ``betti`` is the full list b_0..b_{2 dim}; ``betti_prime`` is present
    for positive genus after dividing out (1-y)^{2g}.  ``omega`` is the
    signed Euler-number specialization."""

    surface: object
    r: int
    beta: int
    alpha: int
    c2: Fraction
    dim: int
    betti: list
    betti_prime: list
    omega: int

    def listed_betti(self):
        """The table form: even-degree prefix up to the middle dimension."""
        return [self.betti[n] for n in range(0, self.dim + 1, 2)]

    def listed_betti_prime(self):
        """b' up to n = dim - g; the rest follows by duality."""
        g = self.surface.g
        return self.betti_prime[: self.dim - g + 1]


def extract_betti(S, gamma, coeff):
    """Betti numbers from one DT Laurent polynomial.

    Multiplies by (-y)^dim, reads b_n as the (-y)^n coefficient, and
    validates palindromicity, nonnegativity, integrality, b_0 = 1,
    vanishing odd part for genus 0, and exact divisibility by
    (1-y)^{2g} for positive genus.
    """
    dim = dim_moduli(S, gamma)
    sign = (-1) ** dim
    shifted = coeff.shift(dim)
    betti = []
    for n in range(0, 2 * dim + 1):
        c = shifted.coefficient(n) * sign * ((-1) ** n)
        if c.denominator != 1:
            raise BettiAlarmError(f"fractional Betti number {c} at degree {n}")
        c = int(c)
        if c < 0:
            raise BettiAlarmError(f"negative Betti number {c} at degree {n}")
        betti.append(c)
    if shifted.coeffs and (shifted.min_exp < 0 or shifted.max_exp > 2 * dim):
        raise BettiAlarmError("invariant support escapes [0, 2 dim]")
    for n in range(2 * dim + 1):
        if betti[n] != betti[2 * dim - n]:
            raise BettiAlarmError(f"non-palindromic Betti list at degree {n}")
    if betti[0] != 1:
        raise BettiAlarmError(f"b_0 = {betti[0]} != 1")
    if S.g == 0 and any(betti[n] for n in range(1, 2 * dim + 1, 2)):
        raise BettiAlarmError("odd Betti numbers present at genus 0")
    betti_prime = None
    if S.g >= 1:
        poly = LaurentPoly({n: Fraction(betti[n] * (-1) ** n) for n in range(2 * dim + 1)})
        divisor = LaurentPoly({0: 1, 1: -1}) ** (2 * S.g)
        try:
            quot = poly.divexact(divisor)
        except NonPolynomialError as exc:
            raise BettiAlarmError("not divisible by (1-y)^(2g)") from exc
        betti_prime = []
        top = 2 * dim - 2 * S.g
        for n in range(0, top + 1):
            c = quot.coefficient(n) * ((-1) ** n)
            if c.denominator != 1 or c < 0:
                raise BettiAlarmError(f"invalid b'_{n} = {c}")
            betti_prime.append(int(c))
        if quot.coeffs and (quot.min_exp < 0 or quot.max_exp > top):
            raise BettiAlarmError("b' support escapes its range")
    omega = sign * sum(betti)
    return OmegaResult(S, gamma.r, gamma.beta, gamma.alpha, gamma.c2, dim,
                       betti, betti_prime, omega)


def theta_simple(coeff, K, q=1):
    """sum_a t^(coeff * a^2) over integers a, truncated at order K."""
    out = TSeries(K, q)
    _accumulate_theta(out, lambda a: Fraction(coeff) * a * a)
    return out


def theta_half_shifted(coeff, K, q=1):
    """sum_a t^(coeff * (a^2 + a + 1/4)) over integers a, truncated at K."""
    out = TSeries(K, q)
    _accumulate_theta(out, lambda a: Fraction(coeff) * (a * a + a + Fraction(1, 4)))
    return out


def _accumulate_theta(out, exponent):
    a = 0
    while True:
        hit = False
        for aa in ((a,) if a == 0 else (a, -a)):
            e = exponent(aa) * out.q
            if e.denominator != 1:
                raise ValueError("theta exponent off the series grid")
            k = int(e)
            if k <= out.kmax:
                hit = True
                prev = out.coeffs.get(k, RatFunc.zero())
                out.coeffs[k] = prev + RatFunc.one()
        if not hit and a > 0:
            return
        a += 1


def theta_double(coeff, K, q=1):
    """sum_{a1,a2} t^(coeff * (a1^2 + a2^2 + a1 a2)), truncated at K."""
    out = TSeries(K, q)
    coeff = Fraction(coeff)
    amax = 1
    while coeff * (amax * amax) <= K * 2:
        amax += 1
    for a1 in range(-amax, amax + 1):
        for a2 in range(-amax, amax + 1):
            e = coeff * (a1 * a1 + a2 * a2 + a1 * a2) * out.q
            if e.denominator != 1:
                raise ValueError("theta exponent off the series grid")
            k = int(e)
            if k <= out.kmax:
                prev = out.coeffs.get(k, RatFunc.zero())
                out.coeffs[k] = prev + RatFunc.one()
    return out


def h_anticanonical(S, r, K, boundary_cache=None):
    """Rational-invariant series at the anticanonical polarization.

    Only S(0,0) and S(0,1) carry an ample anticanonical class, where it
    equals J(2, 2-d).  That polarization is non-generic: classes of equal
    slope need not be proportional, and the extra same-slope splittings
    contribute positive-definite theta sums on top of the generic
    decomposition formula.  Rank 2 and 3 are supported.
    """
    from .wallcross import wallcross_H2, wallcross_H3

    if (S.g, S.d) not in ((0, 0), (0, 1)):
        raise ValueError("anticanonical polarization needs S(0,0) or S(0,1)")
    if r not in (2, 3):
        raise ValueError("anticanonical corrections implemented for rank 2 and 3")
    d = S.d
    m, n = 2, 2 - d
    cache = boundary_cache if boundary_cache is not None else {}
    q = 1 if r == 2 else 2  # rank 3 mixes half-integral gradings at d = 0
    H1 = _cached_boundary(S, 1, K, q, cache)
    pol = Polarization.anticanonical()
    if r == 2:
        H2J = wallcross_H2(S, (0, 0), m, n, K, q, boundary_cache=cache).series
        theta = theta_simple(2 * (1 + 3 * d), K, q)
        series = H2J - (H1 * H1) * theta * Fraction(1, 2)
        return HSeries(S, 2, 0, 0, pol, series)
    H3J = wallcross_H3(S, (0, 0), m, n, K, q, boundary_cache=cache).series
    H2J = wallcross_H2(S, (0, 0), m, n, K, q, boundary_cache=cache).series
    H2tw = wallcross_H2(S, (d - 1, -1), m, n, K, q, boundary_cache=cache).series
    series = (H3J
              - H1 * H2J * theta_simple(6 * (1 + 3 * d), K, q)
              - H1 * H2tw * theta_half_shifted(6 * (1 + 3 * d), K, q)
              + (H1 * H1 * H1) * theta_double(2 * (1 + 3 * d), K, q) * Fraction(1, 3))
    return HSeries(S, 3, 0, 0, pol, series)


def _cached_boundary(S, rank, K, q, cache):
    key = (rank, q)
    if key not in cache:
        cache[key] = H_boundary(S, rank, (0, 0), K, q).series
    return cache[key]


def omega_results(omega_series, c2_values=None):
    """Extract per-class Betti data from a DT generating series.

    Walks the grid points of the series (or the given c2 list) and
    returns {c2: OmegaResult}, skipping classes with vanishing invariant.
    """
    S = omega_series.surface
    out = {}
    if c2_values is None:
        exps = omega_series.series.support()
        g1_sq = (-S.d) * omega_series.beta ** 2 - 2 * omega_series.alpha * omega_series.beta
        c2_values = sorted(set(e + Fraction(omega_series.r - 1, 2 * omega_series.r) * g1_sq
                               for e in exps))
    for c2 in c2_values:
        coeff = omega_series.coefficient_c2(c2)
        if coeff.is_zero():
            continue
        lp = coeff.as_laurent()  # NonPolynomialError here is a pipeline alarm
        gamma = ChernCharacter(S, omega_series.r, omega_series.beta,
                               omega_series.alpha, c2)
        out[c2] = extract_betti(S, gamma, lp)
    return out
