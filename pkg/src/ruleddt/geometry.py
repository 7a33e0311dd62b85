"""Lattice geometry of ruled surfaces.

A ruled surface S(g, d) is the projectivization of O + L over a smooth
genus-g curve, with L of degree d >= 0.  Its divisor lattice is spanned
by the section class C (C^2 = -d) and the fiber class f (f^2 = 0,
C.f = 1).  Everything downstream only needs this intersection form, the
canonical class, and the Euler pairing of Chern characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class DivisorClass:
    """Rational divisor class cC*C + cf*f."""

    cC: Fraction
    cf: Fraction

    def __init__(self, cC, cf):
        object.__setattr__(self, "cC", Fraction(cC))
        object.__setattr__(self, "cf", Fraction(cf))

    def __add__(self, other):
        return DivisorClass(self.cC + other.cC, self.cf + other.cf)

    def __sub__(self, other):
        return DivisorClass(self.cC - other.cC, self.cf - other.cf)

    def __neg__(self):
        return DivisorClass(-self.cC, -self.cf)

    def scale(self, k):
        return DivisorClass(self.cC * k, self.cf * k)

    def is_zero(self):
        return not self.cC and not self.cf


@dataclass(frozen=True)
class RuledSurface:
    """The surface S(g, d); g, d nonnegative integers."""

    g: int
    d: int

    def __post_init__(self):
        if self.g < 0 or self.d < 0:
            raise ValueError("genus and degree must be nonnegative")

    @property
    def chi_O(self):
        return 1 - self.g

    @property
    def canonical_class(self):
        return DivisorClass(-2, 2 * self.g - 2 - self.d)

    def intersect(self, D1, D2):
        """Bilinear extension of C^2 = -d, C.f = 1, f^2 = 0."""
        return (-self.d) * D1.cC * D2.cC + D1.cC * D2.cf + D1.cf * D2.cC

    def fiber(self):
        return DivisorClass(0, 1)

    def section(self):
        return DivisorClass(1, 0)


class Polarization:
    """Polarization choices on a ruled surface.

    * boundary      -- the nef boundary class J(0,1) = f
    * suitable      -- the one-sided limit J(eps,1), eps -> 0+, kept
                       symbolic (slopes compare lexicographically)
    * mixed(m, n)   -- J(m,n) = m(C + d f) + n f with rational m > 0
    * anticanonical -- J = -K, ample only on S(0,0) and S(0,1)
    """

    __slots__ = ("kind", "m", "n")

    def __init__(self, kind, m=None, n=None):
        if kind not in ("boundary", "suitable", "mixed", "anticanonical"):
            raise ValueError(f"unknown polarization kind {kind!r}")
        if kind == "mixed":
            m = Fraction(m)
            n = Fraction(n)
            if m <= 0:
                raise ValueError("mixed polarization needs m > 0")
            if n < 0:
                raise ValueError("mixed polarization needs n >= 0")
        else:
            if m is not None or n is not None:
                raise ValueError(f"{kind} polarization takes no parameters")
        self.kind = kind
        self.m = m
        self.n = n

    @classmethod
    def boundary(cls):
        return cls("boundary")

    @classmethod
    def suitable(cls):
        return cls("suitable")

    @classmethod
    def mixed(cls, m, n):
        return cls("mixed", m, n)

    @classmethod
    def anticanonical(cls):
        return cls("anticanonical")

    def __eq__(self, other):
        if not isinstance(other, Polarization):
            return NotImplemented
        return (self.kind, self.m, self.n) == (other.kind, other.m, other.n)

    def __repr__(self):
        if self.kind == "mixed":
            return f"J({self.m},{self.n})"
        return self.kind

    def validate_for(self, surface):
        if self.kind == "anticanonical" and (surface.g, surface.d) not in ((0, 0), (0, 1)):
            raise ValueError("anticanonical polarization is ample only on S(0,0), S(0,1)")

    def resolve(self, surface):
        """Replace anticanonical by its explicit mixed form J(2, 2-d)."""
        if self.kind == "anticanonical":
            self.validate_for(surface)
            return Polarization.mixed(2, 2 - surface.d)
        return self

    def divisor(self, surface):
        if self.kind == "boundary":
            return surface.fiber()
        if self.kind == "mixed":
            return DivisorClass(self.m, self.m * surface.d + self.n)
        if self.kind == "anticanonical":
            self.validate_for(surface)
            return -surface.canonical_class
        raise ValueError("the suitable polarization is symbolic, not a divisor")

    def slope(self, r, beta, alpha, surface):
        """Slope of (r, beta*C - alpha*f) as a lexicographic tuple.

        For the symbolic suitable polarization the tuple carries the
        fiber slope first and the eps-correction second, so comparisons
        realize the one-sided limit eps -> 0+ exactly.
        """
        if self.kind == "boundary":
            return (Fraction(beta, r),)
        if self.kind == "suitable":
            return (Fraction(beta, r), Fraction(-alpha, r))
        num = surface.intersect(DivisorClass(beta, -alpha), self.divisor(surface))
        return (Fraction(num, r),)


@dataclass(frozen=True)
class ChernCharacter:
    """Chern character (r, gamma_1 = beta*C - alpha*f, c2) on a fixed surface.

    c2 is the primary datum; gamma_2 = c1^2/2 - c2 is derived.
    """

    surface: RuledSurface
    r: int
    beta: int
    alpha: int
    c2: Fraction

    def __init__(self, surface, r, beta, alpha, c2):
        if r < 1:
            raise ValueError("rank must be >= 1")
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "beta", int(beta))
        object.__setattr__(self, "alpha", int(alpha))
        object.__setattr__(self, "c2", Fraction(c2))

    @property
    def gamma1(self):
        return DivisorClass(self.beta, -self.alpha)

    @property
    def c1_squared(self):
        return self.surface.intersect(self.gamma1, self.gamma1)

    @property
    def gamma2(self):
        return Fraction(self.c1_squared, 2) - self.c2

    def twist(self, L):
        """Tensor with a line bundle of class L: the discriminant is unchanged."""
        if L.cC.denominator != 1 or L.cf.denominator != 1:
            raise ValueError("twisting class must be integral")
        S = self.surface
        beta = self.beta + self.r * int(L.cC)
        alpha = self.alpha - self.r * int(L.cf)
        g1 = DivisorClass(beta, -alpha)
        # c2(F x L) from ch: gamma2' = gamma2 + gamma1.L + r L^2/2
        gamma2 = (self.gamma2 + S.intersect(self.gamma1, L)
                  + Fraction(self.r, 2) * S.intersect(L, L))
        c2 = Fraction(S.intersect(g1, g1), 2) - gamma2
        return ChernCharacter(S, self.r, beta, alpha, c2)


def discriminant(gamma):
    """Delta = (1/r)(c2 - (r-1)/(2r) c1^2); twist-invariant, >= 0 if semistable."""
    r = gamma.r
    return Fraction(1, r) * (gamma.c2 - Fraction(r - 1, 2 * r) * gamma.c1_squared)


def r_delta(gamma):
    """The t-grading r*Delta of a Chern character."""
    return gamma.r * discriminant(gamma)


def euler_pairing(S, gamma, gamma_p):
    """Euler pairing chi(gamma, gamma') from Riemann-Roch on the surface."""
    g1, g1p = gamma.gamma1, gamma_p.gamma1
    K = S.canonical_class
    skew = g1.scale(gamma_p.r) - g1p.scale(gamma.r)
    return (gamma_p.gamma2 * gamma.r + gamma.gamma2 * gamma_p.r
            - S.intersect(g1, g1p)
            + Fraction(1, 2) * S.intersect(skew, K)
            + S.chi_O * gamma.r * gamma_p.r)


def euler_self(S, gamma):
    """chi(gamma, gamma) = r^2 (chi(O) - 2 Delta)."""
    return euler_pairing(S, gamma, gamma)


def pairing_antisym(S, gamma, gamma_p):
    """<gamma, gamma'> = chi(gamma,gamma') - chi(gamma',gamma) = (g1 r' - g1' r).K."""
    skew = gamma.gamma1.scale(gamma_p.r) - gamma_p.gamma1.scale(gamma.r)
    return S.intersect(skew, S.canonical_class)


def delta_of_filtration(parts):
    """r*Delta of the sum of the parts, via the filtration decomposition.

    Equals r*discriminant(sum) identically; both routes are exposed so the
    identity can be tested.
    """
    if not parts:
        raise ValueError("need at least one part")
    S = parts[0].surface
    total = sum(r_delta(p) for p in parts)
    return total + filtration_correction(S, [(p.r, p.gamma1) for p in parts])


def filtration_correction(S, rank_gamma1_pairs):
    """The first-Chern cross terms in the filtration formula for r*Delta.

    Takes [(r_i, gamma1_i)] and returns the (rational) correction added
    to sum_i r_i Delta_i; it vanishes when all (r_i, gamma1_i) are
    proportional.
    """
    parts = list(rank_gamma1_pairs)
    total = Fraction(0)
    cum_r = parts[0][0]
    cum_g1 = parts[0][1]
    for i in range(1, len(parts)):
        ri, g1i = parts[i]
        xi = g1i.scale(cum_r) - cum_g1.scale(ri)
        xi_sq = S.intersect(xi, xi)
        total -= Fraction(1, 2 * ri) * Fraction(1, (cum_r + ri) * cum_r) * xi_sq
        cum_r += ri
        cum_g1 = cum_g1 + g1i
    return total


def slope_and_hilbert(S, gamma, J):
    """Slope mu_J and reduced Hilbert polynomial coefficients (quadratic in n).

    Returns (mu, (lead, linear, constant)).
    """
    if J.kind == "suitable":
        raise ValueError("the suitable polarization has no numeric slope")
    Jdiv = J.divisor(S)
    mu = Fraction(S.intersect(gamma.gamma1, Jdiv), gamma.r)
    K = S.canonical_class
    lead = Fraction(S.intersect(Jdiv, Jdiv), 2)
    linear = mu - Fraction(1, 2) * S.intersect(K, Jdiv)
    const = (Fraction(gamma.gamma2 - Fraction(1, 2) * S.intersect(K, gamma.gamma1),
                      gamma.r) + S.chi_O)
    return mu, (lead, linear, const)


def dim_moduli(S, gamma):
    """Complex dimension of the semistable moduli space, 1 - chi(gamma, gamma)."""
    dim = 1 - euler_self(S, gamma)
    if dim.denominator != 1:
        raise ValueError(f"non-integral moduli dimension {dim}")
    dim = int(dim)
    if dim < 0:
        raise ValueError(f"negative moduli dimension {dim}: empty moduli input")
    return dim


def is_suitable(S, J, gamma):
    """Check gamma-suitability of a mixed polarization J.

    Enumerates the finitely many wall classes xi = x*C + y*f with
    -r^4 Delta/2 <= xi^2 < 0 (the Bogomolov window) and requires
    xi.f = 0 or (xi.f)(xi.J) > 0 for each.  Returns (True, None) or
    (False, witness).
    """
    if J.kind == "suitable":
        return True, None
    if J.kind != "mixed":
        raise ValueError("suitability is defined for mixed polarizations")
    bound = Fraction(gamma.r ** 4, 2) * discriminant(gamma)
    if bound <= 0:
        return True, None
    Jdiv = J.divisor(S)
    d = S.d
    xmax = _suitability_x_range(d, bound)
    for x in range(-xmax, xmax + 1):
        if x == 0:
            continue  # xi^2 = 0 there, outside the window
        # -bound <= -d x^2 + 2 x y < 0 determines a y-window
        lo = Fraction(d * x * x - bound, 2 * x)
        hi = Fraction(d * x * x, 2 * x)
        if x < 0:
            lo, hi = hi, lo
        y_first = _ceil(lo)
        y_last = _floor(hi)
        for y in range(y_first, y_last + 1):
            xi_sq = -d * x * x + 2 * x * y
            if not (-bound <= xi_sq < 0):
                continue
            xi = DivisorClass(x, y)
            if x * S.intersect(xi, Jdiv) <= 0:
                return False, xi
    return True, None


def _suitability_x_range(d, bound):
    # xi^2 = -d x^2 + 2xy in [-B, 0) forces |x| <= B: the nonzero residue
    # of d x^2 mod 2x is a multiple of x, so |xi^2| >= |x| whenever y exists
    return max(1, int(bound))


def _ceil(x):
    return -((-x.numerator) // x.denominator)


def _floor(x):
    return x.numerator // x.denominator
