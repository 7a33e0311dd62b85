"""Graded series over the Chern-data monoid, with plethystic calculus.

A GradedSeries assigns a truncated t-series to finitely many grading
keys (r, beta, alpha): the rank and the two first-Chern coordinates
gamma_1 = beta*C - alpha*f.  Rank is truncated at a bound R and the
t-order at K, which makes the plethystic exponential and logarithm
finite computations: the Adams operation multiplies every grading by n,
so only n up to max(R, K*q) can contribute.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RatFunc
from .series import GridMismatchError, TSeries


def mobius(n):
    """Classical Moebius function, mu(n) in {-1, 0, 1}."""
    if n < 1:
        raise ValueError("Moebius function needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def adams(value, n):
    """Adams operation psi_n on a TSeries or GradedSeries."""
    return value.adams(n)


class GradedSeries:
    """Finitely supported map (r, beta, alpha) -> TSeries, rank-truncated."""

    __slots__ = ("rank_bound", "order", "q", "terms")

    def __init__(self, rank_bound, order, q=1, terms=None):
        self.rank_bound = int(rank_bound)
        self.order = Fraction(order)
        self.q = int(q)
        self.terms = {}
        if terms:
            for key, series in terms.items():
                self._set(key, series)

    def _set(self, key, series):
        r, beta, alpha = key
        if r < 0:
            raise ValueError("grading rank must be >= 0")
        if r == 0 and (beta or alpha):
            raise ValueError("rank-0 gradings must have zero first Chern data")
        if series.q != self.q or series.order != self.order:
            raise GridMismatchError("component series on a different grid/order")
        if not series.is_zero() and r <= self.rank_bound:
            self.terms[(int(r), int(beta), int(alpha))] = series

    def _blank(self):
        return GradedSeries(self.rank_bound, self.order, self.q)

    def _zero_series(self):
        return TSeries(self.order, self.q)

    @classmethod
    def zero(cls, rank_bound, order, q=1):
        return cls(rank_bound, order, q)

    @classmethod
    def one(cls, rank_bound, order, q=1):
        out = cls(rank_bound, order, q)
        out.terms[(0, 0, 0)] = TSeries.one(order, q)
        return out

    def is_zero(self):
        return not self.terms

    def component(self, key):
        return self.terms.get(tuple(key), self._zero_series())

    def constant_term(self):
        return self.component((0, 0, 0))

    def _check_compatible(self, other):
        if (self.rank_bound != other.rank_bound or self.order != other.order
                or self.q != other.q):
            raise GridMismatchError("graded series bounds differ")

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.rank_bound == other.rank_bound and self.order == other.order
                and self.q == other.q and self.terms == other.terms)

    def __neg__(self):
        out = self._blank()
        out.terms = {k: -s for k, s in self.terms.items()}
        return out

    def __add__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check_compatible(other)
        out = self._blank()
        out.terms = dict(self.terms)
        for k, s in other.terms.items():
            acc = out.terms.get(k)
            acc = s if acc is None else acc + s
            if acc.is_zero():
                out.terms.pop(k, None)
            else:
                out.terms[k] = acc
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            self._check_compatible(other)
            out = self._blank()
            for (r1, b1, a1), s1 in self.terms.items():
                for (r2, b2, a2), s2 in other.terms.items():
                    r = r1 + r2
                    if r > self.rank_bound:
                        continue
                    key = (r, b1 + b2, a1 + a2)
                    prod = s1 * s2
                    acc = out.terms.get(key)
                    acc = prod if acc is None else acc + prod
                    if acc.is_zero():
                        out.terms.pop(key, None)
                    else:
                        out.terms[key] = acc
            return out
        # scalar (RatFunc / int / Fraction)
        out = self._blank()
        for k, s in self.terms.items():
            prod = s * other
            if not prod.is_zero():
                out.terms[k] = prod
        return out

    __rmul__ = __mul__

    def scale(self, scalar):
        return self * scalar

    def adams(self, n):
        """psi_n: scales every grading key by n and maps y->y^n, t->t^n."""
        if n < 1:
            raise ValueError("Adams index must be >= 1")
        if n == 1:
            return self
        out = self._blank()
        for (r, beta, alpha), s in self.terms.items():
            if r * n > self.rank_bound:
                continue
            sn = s.adams(n)
            if not sn.is_zero():
                key = (r * n, beta * n, alpha * n)
                acc = out.terms.get(key)
                out.terms[key] = sn if acc is None else acc + sn
        return out

    def _positive_part_bound(self):
        # any term with r >= 1 dies past rank_bound; pure-t terms die past K*q
        return max(self.rank_bound, int(self.order * self.q)) + 1

    def exp(self):
        """Ordinary exponential; requires zero constant term."""
        if not self.constant_term().is_zero():
            raise ValueError("exp needs a vanishing constant term")
        result = GradedSeries.one(self.rank_bound, self.order, self.q)
        power = GradedSeries.one(self.rank_bound, self.order, self.q)
        fact = 1
        for k in range(1, self._positive_part_bound() + 1):
            power = power * self
            if power.is_zero():
                break
            fact *= k
            result = result + power * Fraction(1, fact)
        return result

    def log(self):
        """Ordinary logarithm; requires constant term 1."""
        if self.constant_term() != TSeries.one(self.order, self.q):
            raise ValueError("log needs constant term 1")
        x = self - GradedSeries.one(self.rank_bound, self.order, self.q)
        result = self._blank()
        power = GradedSeries.one(self.rank_bound, self.order, self.q)
        for k in range(1, x._positive_part_bound() + 1):
            power = power * x
            if power.is_zero():
                break
            result = result + power * Fraction((-1) ** (k - 1), k)
        return result


def plethystic_exp(f):
    """Exp(f) = exp(sum_n psi_n(f)/n) for f with zero constant term."""
    if not f.constant_term().is_zero():
        raise ValueError("plethystic Exp needs a vanishing constant term")
    acc = f._blank()
    for n in range(1, f._positive_part_bound() + 1):
        fn = f.adams(n)
        if fn.is_zero():
            continue
        acc = acc + fn * Fraction(1, n)
    return acc.exp()


def plethystic_log(f):
    """Log(f) = sum_n (mu(n)/n) psi_n(log f) for f with constant term 1."""
    lg = f.log()
    acc = f._blank()
    for n in range(1, f._positive_part_bound() + 1):
        mu = mobius(n)
        if not mu:
            continue
        ln = lg.adams(n)
        if ln.is_zero():
            continue
        acc = acc + ln * Fraction(mu, n)
    return acc
