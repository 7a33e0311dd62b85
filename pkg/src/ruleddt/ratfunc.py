"""Rational functions in y, the coefficient field of all series.

A RatFunc is a quotient of two Laurent polynomials kept in a unique
canonical form: numerator and denominator coprime, denominator an
ordinary polynomial (lowest exponent 0) with leading coefficient 1.
Equality of values is then structural equality.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, NonPolynomialError, poly_gcd


def _coerce_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.monomial(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")


class RatFunc:
    """Canonical quotient num/den of Laurent polynomials over the rationals."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly()
            self.den = LaurentPoly.one()
            return
        # move the denominator's y^k unit into the numerator
        shift = den.min_exp
        if shift:
            num = num.shift(-shift)
            den = den.shift(-shift)
        g = poly_gcd(num, den)
        if g.max_exp > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        lead = den.coefficient(den.max_exp)
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        out = cls.__new__(cls)
        out.num = num
        out.den = den
        return out

    @classmethod
    def zero(cls):
        return cls._raw(LaurentPoly(), LaurentPoly.one())

    @classmethod
    def one(cls):
        return cls._raw(LaurentPoly.one(), LaurentPoly.one())

    @classmethod
    def monomial(cls, coeff, exp=0):
        c = Fraction(coeff)
        if not c:
            return cls.zero()
        return cls._raw(LaurentPoly.monomial(c, exp), LaurentPoly.one())

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == LaurentPoly.one() and self.den == LaurentPoly.one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        # cross-cancel before multiplying to keep intermediates small
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = poly_gcd(a, d)
        if g1.max_exp > 0:
            a = a.divexact(g1)
            d = d.divexact(g1)
        g2 = poly_gcd(c, b)
        if g2.max_exp > 0:
            c = c.divexact(g2)
            b = b.divexact(g2)
        return RatFunc(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce_ratfunc(other) / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_power(self, n):
        """Adams substitution y -> y^n."""
        if n == 1:
            return self
        return RatFunc(self.num.substitute_power(n), self.den.substitute_power(n))

    def evaluate(self, value):
        d = self.den.evaluate(value)
        if not d:
            raise ZeroDivisionError(f"pole at y = {value}")
        return self.num.evaluate(value) / d

    def as_laurent(self):
        """Return the underlying Laurent polynomial when the quotient is exact.

        Raises NonPolynomialError otherwise; in the invariant pipeline a
        failure here is a correctness alarm, never an expected event.
        """
        if self.den == LaurentPoly.one():
            return self.num
        return self.num.divexact(self.den)

    def is_laurent(self):
        try:
            self.as_laurent()
            return True
        except NonPolynomialError:
            return False

    def __str__(self):
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _coerce_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.monomial(value)
    if isinstance(value, LaurentPoly):
        return RatFunc(value)
    return NotImplemented


def laurent_from_ratfunc(f):
    """Exact conversion RatFunc -> LaurentPoly (NonPolynomialError otherwise)."""
    return f.as_laurent()


def one_minus_y_power(exp):
    """The rational function 1 - y^exp (exp may be negative)."""
    return RatFunc(LaurentPoly({0: 1, exp: -1}))
