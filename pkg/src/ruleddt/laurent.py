"""Exact Laurent polynomials in the cohomological variable y.

A Laurent polynomial is stored as a sparse map from integer exponents to
nonzero rational coefficients.  The zero polynomial is the empty map.
All arithmetic is exact; coefficients are ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction


class NonPolynomialError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class LaurentPoly:
    """Sparse Laurent polynomial sum_e c_e y^e with rational c_e.

    Invariants: no stored zero coefficients; the empty map is 0.
    Instances are treated as immutable after construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs, min_exp=0):
        """Build from a coefficient list starting at exponent ``min_exp``."""
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    @property
    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def coefficient(self, exp):
        return self.coeffs.get(exp, Fraction(0))

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by y^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def substitute_power(self, n):
        """Adams substitution y -> y^n."""
        if n == 1:
            return self
        return LaurentPoly({e * n: c for e, c in self.coeffs.items()})

    def evaluate(self, value):
        value = Fraction(value)
        if not value and self.coeffs and self.min_exp < 0:
            raise ZeroDivisionError("evaluating negative exponent at 0")
        return sum((c * value ** e for e, c in self.coeffs.items()), Fraction(0))

    def divexact(self, other):
        """Exact division; raises NonPolynomialError on a remainder."""
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.monomial(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        q, r = _divmod_poly(self, other)
        if not r.is_zero():
            raise NonPolynomialError(
                "division leaves a remainder; result is not a Laurent polynomial"
            )
        return q

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*y")
            else:
                parts.append(f"{c}*y^{e}")
        return " + ".join(parts)

    __repr__ = __str__


def _divmod_poly(a, b):
    """Laurent division: returns (q, r) with a = q*b + r, r of y-span < span(b).

    The y^k units are factored out first, so this is ordinary polynomial
    division on the shifted representatives.
    """
    sa = a.min_exp
    sb = b.min_exp
    num = {e - sa: c for e, c in a.coeffs.items()}
    den = {e - sb: c for e, c in b.coeffs.items()}
    dd = max(den)
    lead = den[dd]
    rem = dict(num)
    quo = {}
    while rem:
        dr = max(rem)
        if dr < dd:
            break
        f = rem[dr] / lead
        quo[dr - dd] = f
        for e, c in den.items():
            k = dr - dd + e
            s = rem.get(k, 0) - f * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    shift = sa - sb
    q = LaurentPoly({e + shift: c for e, c in quo.items()})
    r = LaurentPoly({e + sa: c for e, c in rem.items()})
    return q, r


def poly_gcd(a, b):
    """Monic gcd over the rationals, ignoring y^k unit factors.

    Returns a polynomial with lowest exponent 0 and leading coefficient 1.
    """
    if a.is_zero() and b.is_zero():
        return LaurentPoly()
    u = {e - a.min_exp: c for e, c in a.coeffs.items()} if a else {}
    v = {e - b.min_exp: c for e, c in b.coeffs.items()} if b else {}
    while v:
        u = _poly_mod(u, v)
        u, v = v, u
    lead = u[max(u)]
    return LaurentPoly({e: c / lead for e, c in u.items()})


def _poly_mod(u, v):
    dd = max(v)
    lead = v[dd]
    rem = dict(u)
    while rem:
        dr = max(rem)
        if dr < dd:
            break
        f = rem[dr] / lead
        for e, c in v.items():
            k = dr - dd + e
            s = rem.get(k, 0) - f * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return rem
