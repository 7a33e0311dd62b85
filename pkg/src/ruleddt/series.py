"""Truncated power series in the discriminant-tracking variable t.

Coefficients are RatFunc values in y.  Exponents live on the grid
(1/q)*Z for a fixed denominator q >= 1; this is required because the
natural t-grading r*Delta is only a rational number in general (it lies
in Z/2r for rank r).  The truncation order K is inclusive and every
operation re-truncates, so no computation ever depends on terms beyond
t^K.  Exponents below 0 are representable (wall-crossing corrections
cancel there term by term); finished pipeline series must have support
in [0, K], which callers assert.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RatFunc, _coerce_ratfunc


class GridMismatchError(ValueError):
    """Raised when combining series on different grids or orders."""


def _grid_index(exponent, q):
    e = Fraction(exponent)
    idx = e * q
    if idx.denominator != 1:
        raise GridMismatchError(f"exponent {e} not on the 1/{q} grid")
    return int(idx)


class TSeries:
    """Sparse truncated series sum_k c_k t^(k/q), kept exactly to order K."""

    __slots__ = ("q", "kmax", "coeffs")

    def __init__(self, order, q=1, coeffs=None):
        self.q = int(q)
        if self.q < 1:
            raise ValueError("grid denominator must be >= 1")
        kmax = Fraction(order) * self.q
        if kmax.denominator != 1 or kmax < 0:
            raise ValueError(f"order {order} not a nonnegative multiple of 1/{q}")
        self.kmax = int(kmax)
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                c = _coerce_ratfunc(c)
                if c is NotImplemented:
                    raise TypeError("series coefficients must be RatFunc-like")
                if not c.is_zero() and k <= self.kmax:
                    clean[int(k)] = c
        self.coeffs = clean

    @property
    def order(self):
        return Fraction(self.kmax, self.q)

    @classmethod
    def zero(cls, order, q=1):
        return cls(order, q)

    @classmethod
    def one(cls, order, q=1):
        return cls(order, q, {0: RatFunc.one()})

    @classmethod
    def constant(cls, value, order, q=1):
        return cls(order, q, {0: value})

    @classmethod
    def monomial(cls, value, exponent, order, q=1):
        s = cls(order, q)
        k = _grid_index(exponent, s.q)
        v = _coerce_ratfunc(value)
        if not v.is_zero() and k <= s.kmax:
            s.coeffs[k] = v
        return s

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, exponent):
        """Coefficient of t^exponent (a RatFunc; zero if absent)."""
        return self.coeffs.get(_grid_index(exponent, self.q), RatFunc.zero())

    def support(self):
        return sorted(Fraction(k, self.q) for k in self.coeffs)

    def min_nonneg_support(self):
        return all(k >= 0 for k in self.coeffs)

    def _check_compatible(self, other):
        if self.q != other.q or self.kmax != other.kmax:
            raise GridMismatchError(
                f"grid/order mismatch: (q={self.q}, K={self.order}) vs "
                f"(q={other.q}, K={other.order})"
            )

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return (self.q == other.q and self.kmax == other.kmax
                and self.coeffs == other.coeffs)

    def __neg__(self):
        return TSeries(self.order, self.q, {k: -c for k, c in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        res = TSeries(self.order, self.q)
        res.coeffs = out
        return res

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TSeries):
            self._check_compatible(other)
            out = {}
            a, b = self.coeffs, other.coeffs
            if len(a) > len(b):
                a, b = b, a
            for ka, ca in a.items():
                for kb, cb in b.items():
                    k = ka + kb
                    if k > self.kmax:
                        continue
                    prod = ca * cb
                    s = out.get(k)
                    s = prod if s is None else s + prod
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
            res = TSeries(self.order, self.q)
            res.coeffs = out
            return res
        scalar = _coerce_ratfunc(other)
        if scalar is NotImplemented:
            return NotImplemented
        if scalar.is_zero():
            return TSeries(self.order, self.q)
        return TSeries(self.order, self.q,
                       {k: c * scalar for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse to order K.

        Requires support in [0, K] and an invertible constant term.
        """
        if any(k < 0 for k in self.coeffs):
            raise ValueError("cannot invert a series with negative exponents")
        c0 = self.coeffs.get(0)
        if c0 is None or c0.is_zero():
            raise ZeroDivisionError("constant term is not invertible")
        inv0 = c0.inverse()
        out = {0: inv0}
        body = [(k, c) for k, c in self.coeffs.items() if k > 0]
        for k in range(1, self.kmax + 1):
            acc = RatFunc.zero()
            for j, cj in body:
                if j > k:
                    continue
                prev = out.get(k - j)
                if prev is not None:
                    acc = acc + cj * prev
            if not acc.is_zero():
                out[k] = -(inv0 * acc)
        res = TSeries(self.order, self.q)
        res.coeffs = {k: c for k, c in out.items() if not c.is_zero()}
        return res

    def adams(self, n):
        """Adams operation: y -> y^n and t -> t^n, re-truncated at K."""
        if n < 1:
            raise ValueError("Adams index must be >= 1")
        if n == 1:
            return self
        out = {}
        for k, c in self.coeffs.items():
            kn = k * n
            if kn <= self.kmax:
                out[kn] = c.substitute_power(n)
        res = TSeries(self.order, self.q)
        res.coeffs = out
        return res

    def shift_t(self, exponent):
        """Multiply by t^exponent (terms sliding past K are dropped)."""
        dk = _grid_index(exponent, self.q)
        res = TSeries(self.order, self.q)
        res.coeffs = {k + dk: c for k, c in self.coeffs.items() if k + dk <= self.kmax}
        return res

    def regrid(self, new_q):
        """Refine the exponent grid to 1/new_q (new_q a multiple of q)."""
        if new_q % self.q:
            raise GridMismatchError(f"new grid 1/{new_q} does not refine 1/{self.q}")
        f = new_q // self.q
        res = TSeries(self.order, new_q)
        res.coeffs = {k * f: c for k, c in self.coeffs.items()}
        return res

    def truncate(self, order):
        """Restrict to a smaller inclusive order."""
        new_kmax = Fraction(order) * self.q
        if new_kmax.denominator != 1 or new_kmax > self.kmax:
            raise ValueError("can only truncate to a smaller on-grid order")
        res = TSeries(order, self.q)
        res.coeffs = {k: c for k, c in self.coeffs.items() if k <= res.kmax}
        return res

    def mul_one_minus_monomial(self, y_exp, t_exponent, power=1):
        """Multiply by (1 - y^y_exp * t^t_exponent)^power for t_exponent > 0.

        Negative powers divide; this is the workhorse for the infinite
        products defining the boundary generating functions.
        """
        j = _grid_index(t_exponent, self.q)
        if j <= 0:
            raise ValueError("factor must have positive t-exponent")
        res = self
        for _ in range(abs(power)):
            if power > 0:
                res = res._mul_factor(y_exp, j)
            else:
                res = res._div_factor(y_exp, j)
        return res

    def _mul_factor(self, y_exp, j):
        mono = RatFunc.monomial(1, y_exp)
        out = dict(self.coeffs)
        for k, c in self.coeffs.items():
            kj = k + j
            if kj > self.kmax:
                continue
            s = out.get(kj)
            term = c * mono
            s = -term if s is None else s - term
            if s.is_zero():
                out.pop(kj, None)
            else:
                out[kj] = s
        res = TSeries(self.order, self.q)
        res.coeffs = out
        return res

    def _div_factor(self, y_exp, j):
        # forward substitution: b[k] = a[k] + y^e b[k-j]
        if any(k < 0 for k in self.coeffs):
            raise ValueError("cannot divide a series with negative exponents")
        mono = RatFunc.monomial(1, y_exp)
        out = {}
        for k in range(0, self.kmax + 1):
            acc = self.coeffs.get(k, RatFunc.zero())
            prev = out.get(k - j)
            if prev is not None:
                acc = acc + mono * prev
            if not acc.is_zero():
                out[k] = acc
        res = TSeries(self.order, self.q)
        res.coeffs = out
        return res

    def map_coefficients(self, fn):
        out = {}
        for k, c in self.coeffs.items():
            v = fn(c)
            if not v.is_zero():
                out[k] = v
        res = TSeries(self.order, self.q)
        res.coeffs = out
        return res

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            e = Fraction(k, self.q)
            parts.append(f"({self.coeffs[k]})*t^{e}")
        return " + ".join(parts)

    __repr__ = __str__
