"""Rational functions in one variable, kept in canonical form."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from convexenum.exact.polynomial import Polynomial
from convexenum.exact.series import TruncatedSeries


class RationalFunction:
    """A quotient num/den of integer-coefficient polynomials.

    Canonical form: gcd(num, den) = 1, coefficients are integers with
    overall content 1, and the denominator has a positive leading
    coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial((1,))):
        num = self._as_poly(num)
        den = self._as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = self._canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _as_poly(p) -> Polynomial:
        if isinstance(p, Polynomial):
            return p
        if isinstance(p, (int, Fraction)):
            return Polynomial((p,))
        return Polynomial(p)

    @staticmethod
    def _canonicalize(num: Polynomial, den: Polynomial):
        if num.is_zero():
            return Polynomial.zero(), Polynomial.one()
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        # clear coefficient denominators, then divide by integer content
        denom_lcm = lcm(*(c.denominator for c in num.coeffs + den.coeffs))
        ints = [int(c * denom_lcm) for c in num.coeffs + den.coeffs]
        content = gcd(*ints)
        scale = Fraction(denom_lcm, content)
        num, den = num * scale, den * scale
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return num, den

    # -- basics -------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- field arithmetic ---------------------------------------------

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return cls(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- expansion ----------------------------------------------------

    def to_series(self, order: int) -> TruncatedSeries:
        """Power-series expansion; the denominator must be a unit at 0."""
        if self.den[0] == 0:
            raise ZeroDivisionError(
                "denominator constant term is zero; no power-series expansion")
        num = TruncatedSeries.from_polynomial(self.num, order)
        den = TruncatedSeries.from_polynomial(self.den, order)
        return num * den.invert()

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"
