"""Polarization change for the stack series, rank 2 and 3.

Crossing from the fiber-boundary chamber to a polarization J(m,n)
corrects the series by indefinite-theta-type lattice sums.  Two
independent evaluations are provided:

* ``wallcross_H2`` / ``wallcross_H3`` use the resummed forms: for each
  first-Chern splitting parameter b there is a unique base point of the
  inner geometric sum, whose terms are enumerated exactly up to the
  truncation order (the closed rational form is used when the ratio is
  t-free);

* ``joyce_wallcross_general`` enumerates decompositions of the class
  directly and applies the wall-crossing sign function evaluated from
  its definition.

Infinitesimal tie-breaks never become numbers: the sign of x + v with
0 < v infinitesimal is +1 exactly when x >= 0, and slopes at the
symbolic polarization J(eps,1) compare lexicographically.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .geometry import DivisorClass, Polarization, filtration_correction
from .hseries import HSeries, H_boundary, H_suitable, compositions
from .ratfunc import RatFunc, one_minus_y_power
from .series import TSeries


class NonTerminatingError(RuntimeError):
    """The lattice enumeration failed its stability bound check."""


def _floor(x):
    x = Fraction(x)
    return x.numerator // x.denominator


def joyce_sign(parts, S, J, J_prime):
    """The wall-crossing sign for a tuple of classes, from its definition.

    ``parts`` is a list of (r, beta, alpha).  At each cut position the
    adjacent slopes under J and the cumulative slopes under J' are
    compared; an (a)-type position flips the sign, a (b)-type one is
    neutral, anything else kills the term.
    """
    ell = len(parts)
    if ell == 1:
        return 1
    mu = [J.slope(r, b, a, S) for (r, b, a) in parts]
    tot_r = sum(p[0] for p in parts)
    tot_b = sum(p[1] for p in parts)
    tot_a = sum(p[2] for p in parts)
    k = 0
    r1 = b1 = a1 = 0
    for i in range(ell - 1):
        r1 += parts[i][0]
        b1 += parts[i][1]
        a1 += parts[i][2]
        head = J_prime.slope(r1, b1, a1, S)
        tail = J_prime.slope(tot_r - r1, tot_b - b1, tot_a - a1, S)
        if mu[i] <= mu[i + 1] and head > tail:
            k += 1
        elif mu[i] > mu[i + 1] and head <= tail:
            pass
        else:
            return 0
    return (-1) ** k


def _require_ample(S, m, n):
    m = Fraction(m)
    n = Fraction(n)
    if m <= 0 or n <= 0:
        raise ValueError(f"J({m},{n}) is not ample")
    return m, n


def _lattice_factor(sign_arg, w_star, y_step, t_step, order, q):
    """One inner sum of a resummed wall-crossing correction.

    Encodes (1/2)(sgn(J'-comparison + v) - sgn(sign_arg + v)) summed over
    a lattice variable w with weight y^(y_step*w) t^(t_step*w), where
    w_star is the largest w at which the J' comparison is still >= 0:

    * sign_arg >= 0: terms -y^.. t^.. over w > w_star,
    * sign_arg < 0:  terms +y^.. t^.. over w <= w_star.

    The sign argument and t_step always agree in sign here, so the
    t-exponent strictly increases along the walk and truncation
    terminates it.  A t-free ratio (t_step = 0) collapses to the closed
    rational form y^(y_step*w_star) / (1 - y^(-y_step)).
    """
    s = TSeries(order, q)
    if t_step == 0:
        e = Fraction(y_step) * w_star
        if e.denominator != 1 or int(e) % 2:
            raise ArithmeticError("odd or fractional y-exponent in closed factor")
        s.coeffs[0] = RatFunc.monomial(1, int(e)) / one_minus_y_power(-y_step)
        return s
    if (sign_arg > 0) != (t_step > 0):
        raise ArithmeticError("sign argument and t-step disagree; sum would not truncate")
    if sign_arg >= 0:
        w, direction, sign = w_star + 1, 1, -1
    else:
        w, direction, sign = w_star, -1, 1
    out = {}
    while True:
        k = Fraction(t_step) * w * q
        if k.denominator != 1:
            raise ArithmeticError("t-exponent off the grid in a lattice sum")
        k = int(k)
        if k > s.kmax:
            break
        e = Fraction(y_step) * w
        if e.denominator != 1 or int(e) % 2:
            raise ArithmeticError("odd or fractional y-exponent in lattice sum")
        prev = out.get(k, RatFunc.zero())
        out[k] = prev + RatFunc.monomial(sign, int(e))
        w += direction
    s.coeffs = {k: c for k, c in out.items() if not c.is_zero()}
    return s


def _base_monomial(y_exp, t_exp, order, q):
    """(-y)^y_exp * t^t_exp as a one-term series."""
    e = Fraction(y_exp)
    if e.denominator != 1:
        raise ArithmeticError("non-integral y-exponent")
    e = int(e)
    return TSeries.monomial(RatFunc.monomial((-1) ** (e % 2), e), t_exp, order, q)


def _lattice_b_values(offset, growth, K, extra=2):
    """The b-range whose slices can reach t-exponents <= K.

    ``growth`` is the coefficient of the positive-definite lower bound
    growth * b^2 on the minimal slice exponent; ``extra`` values are
    appended on each side as the stability guard (their slices must
    contribute nothing, which the caller gets for free since slice terms
    beyond K are dropped).
    """
    if growth <= 0:
        raise NonTerminatingError("lattice sum lower bound is not positive definite")
    limit = Fraction(K) / growth
    bmax = isqrt(limit.numerator // limit.denominator) + 1 + extra
    out = []
    if offset == 0:
        out.append(Fraction(0))
        start = 1
    else:
        start = 0
    for j in range(start, bmax + 1):
        out.append(Fraction(j) + offset)
        out.append(-(Fraction(j) + offset))
    return out


def wallcross_H2(S, gamma1, m, n, K, q=1, boundary_cache=None):
    """Rank-2 stack series at J(m,n) via the resummed correction sums.

    Only the twist class of gamma_1 matters, so (beta, alpha) are used
    modulo 2; for odd beta the chamber term vanishes and the result is
    pure lattice correction (on the half-integer grid).
    """
    m, n = _require_ample(S, m, n)
    beta, alpha = gamma1
    cache = boundary_cache if boundary_cache is not None else {}

    def Hb(j):
        key = (j, q)
        if key not in cache:
            cache[key] = H_boundary(S, j, (0, 0), K, q).series
        return cache[key]

    d, g = S.d, S.g
    b_off = Fraction(beta % 2, 2)
    a_off = Fraction(alpha % 2, 2)
    growth = d + 2 * n / m
    corr = TSeries(K, q)
    for b in _lattice_b_values(b_off, growth, K):
        if b and growth * b * b > K:
            continue
        a_star = _floor(n * b / m - a_off) + a_off
        base = _base_monomial(-2 * b * (d - 2 + 2 * g), d * b * b, K, q)
        inner = _lattice_factor(b, a_star, -4, 2 * b, K, q)
        term = base * inner
        corr = corr + term
    total = (Hb(1) * Hb(1)) * corr
    if beta % 2 == 0:
        total = total + Hb(2)
    return HSeries(S, 2, beta, alpha, Polarization.mixed(m, n), total)


def wallcross_H3(S, gamma1, m, n, K, q=1, boundary_cache=None):
    """Rank-3 stack series at J(m,n) via the resummed correction sums.

    Supported for gamma_1 = 0 modulo twists (beta and alpha divisible
    by 3), which covers every tabulated case; the general class goes
    through joyce_wallcross_general instead.
    """
    m, n = _require_ample(S, m, n)
    beta, alpha = gamma1
    if beta % 3 or alpha % 3:
        raise ValueError("rank-3 resummed form needs gamma_1 = 0 modulo twists")
    cache = boundary_cache if boundary_cache is not None else {}

    def Hb(j):
        key = (j, q)
        if key not in cache:
            cache[key] = H_boundary(S, j, (0, 0), K, q).series
        return cache[key]

    d, g = S.d, S.g
    growth = d + 2 * n / m

    # ordered rank splittings (2,1) and (1,2): equal contributions
    corr21 = TSeries(K, q)
    for b in _lattice_b_values(0, 3 * growth, K):
        if b and 3 * growth * b * b > K:
            continue
        a_star = _floor(2 * n * b / m)
        base = _base_monomial(-6 * b * (2 * g - 2 + d), 3 * d * b * b, K, q)
        inner = _lattice_factor(b, a_star, -6, 3 * b, K, q)
        corr21 = corr21 + base * inner

    # three rank-1 parts: a double lattice sum with two geometric factors
    corr111 = TSeries(K, q)
    limit = Fraction(K) / growth
    bmax = isqrt(limit.numerator // limit.denominator) + 3
    for b1 in range(-bmax, bmax + 1):
        for b2 in range(-bmax, bmax + 1):
            quad = b1 * b1 + b2 * b2 + b1 * b2
            if (b1 or b2) and growth * quad > K:
                continue
            corr111 = corr111 + _triple_slice(b1, b2, d, g, m, n, K, q)
    total = (Hb(2) * Hb(1)) * (corr21 * 2) \
        + (Hb(1) * Hb(1) * Hb(1)) * corr111 + Hb(3)
    return HSeries(S, 3, beta, alpha, Polarization.mixed(m, n), total)


def _triple_slice(b1, b2, d, g, m, n, K, q):
    """One (b1, b2) slice of the three-part correction.

    The two geometric factors can individually dip below t^0 before the
    slice total climbs back above it, so they are built at an extended
    order and the product is re-truncated.
    """
    B_u = 2 * b1 + b2
    B_a = b2 - b1
    u_star = _floor(Fraction(n * (b1 + b2), m))
    a_star = _floor(Fraction(n * b2, m))
    # minimal exponents of each factor (first term of its walk)
    min_u = _factor_min_exp(B_u, u_star)
    min_a = _factor_min_exp(B_a, a_star)
    ext = max(0, -min_u) + max(0, -min_a)
    order = Fraction(K) + ext
    base = _base_monomial(-2 * (b1 + 2 * b2) * (2 * g - 2 + d),
                          d * (b1 * b1 + b2 * b2 + b1 * b2), order, q)
    fu = _lattice_factor(B_u, u_star, -4, B_u, order, q)
    fa = _lattice_factor(B_a, a_star, -4, B_a, order, q)
    slice_series = base * fu * fa
    out = TSeries(K, q)
    kmax = out.kmax
    out.coeffs = {k: c for k, c in slice_series.coeffs.items() if k <= kmax}
    return out


def _factor_min_exp(step, w_star):
    """Smallest t-exponent a lattice factor can emit."""
    if step == 0:
        return Fraction(0)
    first = w_star + 1 if step > 0 else w_star
    return Fraction(step) * first


def joyce_wallcross_general(S, r, gamma1, target, K, q=1, source=None,
                            max_radius=None):
    """Stack series at the target polarization by direct enumeration.

    Implements the wall-crossing sum over decompositions of the class:
    each tuple of parts carries the sign function evaluated from its
    definition, a (-y) power from the antisymmetrized pairing against
    the canonical class, and the discriminant-filtration shift of the
    t-grading.  The lattice radius of the first-Chern parts grows until
    two consecutive enlargements change nothing; failure to stabilize
    raises NonTerminatingError.

    Enumeration runs from the suitable chamber J(eps,1), whose part
    series are already resummed; a boundary source is accepted and means
    the same thing, since the slope-tie families separating the boundary
    from its adjacent chamber only converge through that resummation and
    never contribute walls beyond it.  rank <= 3 only.
    """
    if r > 3:
        raise ValueError("general wall-crossing is implemented for rank <= 3")
    beta, alpha = gamma1
    if source is not None and source.kind not in ("boundary", "suitable"):
        raise ValueError("enumeration starts from the boundary/suitable chamber")
    if target.kind == "boundary":
        return H_boundary(S, r, gamma1, K, q)
    if target.kind == "suitable":
        return H_suitable(S, r, gamma1, K, q)
    target = target.resolve(S)
    _require_ample(S, target.m, target.n)
    part_cache = {}

    def Hpart(rank, alpha_part, order):
        key = (rank, alpha_part % rank, Fraction(order))
        if key not in part_cache:
            part_cache[key] = H_suitable(S, rank, (0, alpha_part % rank),
                                         order, q).series
        return part_cache[key]

    radius = 2 * (int(Fraction(K)) + 1)
    cap = max_radius if max_radius is not None else 8 * (int(Fraction(K)) + 2) + 16
    prev = None
    while True:
        current = _joyce_sum(S, r, beta, alpha, target, K, q, Hpart, radius)
        if prev is not None and current == prev:
            return HSeries(S, r, beta, alpha, target, current)
        if radius > cap:
            raise NonTerminatingError(
                f"wall-crossing enumeration did not stabilize within radius {cap}")
        prev = current
        radius += 2


def _joyce_sum(S, r, beta, alpha, target, K, q, Hpart, radius):
    source = Polarization.suitable()
    Kdiv = S.canonical_class
    total = TSeries(K, q)
    for comp in compositions(r):
        ell = len(comp)
        if ell == 1:
            if beta % r == 0:
                total = total + Hpart(r, alpha, K)
            continue
        # group tuples by the twist classes of the parts: the part series
        # depend on alpha_i mod r_i, the weights on the full lattice data
        groups = {}
        for b_tuple in _b_tuples(comp, beta, radius):
            for a_tuple in _a_tuples(ell, alpha, radius):
                parts = list(zip(comp, b_tuple, a_tuple))
                sgn = joyce_sign(parts, S, source, target)
                if not sgn:
                    continue
                g1s = [(rp, DivisorClass(bp, -ap)) for (rp, bp, ap) in parts]
                shift = filtration_correction(S, g1s)
                if shift > K:
                    continue
                e = _pairing_exponent(S, Kdiv, parts)
                key = tuple(ap % rp for rp, _, ap in parts)
                groups.setdefault(key, []).append((sgn, e, shift))
        for key, tuples in groups.items():
            min_shift = min(Fraction(0), min(sh for _, _, sh in tuples))
            ext_order = Fraction(K) - min_shift
            W = TSeries(ext_order, q)
            for sgn, e, shift in tuples:
                W = W + TSeries.monomial(RatFunc.monomial(sgn * ((-1) ** (e % 2)), e),
                                         shift, ext_order, q)
            prod = TSeries.one(ext_order, q)
            for rp, ap in zip(comp, key):
                prod = prod * Hpart(rp, ap, ext_order)
            contrib = prod * W
            clipped = TSeries(K, q)
            clipped.coeffs = {k: c for k, c in contrib.coeffs.items()
                              if k <= clipped.kmax}
            total = total + clipped
    return total


def _pairing_exponent(S, Kdiv, parts):
    """-(sum_{j<i} (r_j g1_i - r_i g1_j)) . K for an ordered tuple."""
    acc = DivisorClass(0, 0)
    cum_r = 0
    cum_g1 = DivisorClass(0, 0)
    for (rp, bp, ap) in parts:
        g1 = DivisorClass(bp, -ap)
        acc = acc + (g1.scale(cum_r) - cum_g1.scale(rp))
        cum_r += rp
        cum_g1 = cum_g1 + g1
    e = -S.intersect(acc, Kdiv)
    if Fraction(e).denominator != 1:
        raise ArithmeticError("non-integral pairing exponent")
    return int(e)


def _b_tuples(comp, beta, radius):
    """First-Chern fiber coefficients per part: b_i in r_i * Z, sum beta."""
    ell = len(comp)

    def rec(i, remaining):
        if i == ell - 1:
            if remaining % comp[i] == 0 and abs(remaining) <= radius:
                yield (remaining,)
            return
        rp = comp[i]
        for k in range(-radius, radius + 1):
            b = rp * k
            if abs(b) > radius:
                continue
            for rest in rec(i + 1, remaining - b):
                yield (b,) + rest

    yield from rec(0, beta)


def _a_tuples(ell, alpha, radius):
    def rec(i, remaining):
        if i == ell - 1:
            if abs(remaining) <= radius:
                yield (remaining,)
            return
        for a in range(-radius, radius + 1):
            for rest in rec(i + 1, remaining - a):
                yield (a,) + rest

    yield from rec(0, alpha)
