"""Formal power series truncated at an explicit order."""

from __future__ import annotations

from fractions import Fraction

from convexenum.exact.polynomial import Polynomial

#: Truncation order used when callers do not specify one.  Large enough to
#: cover every golden sequence with margin.
DEFAULT_ORDER = 64


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TruncatedSeries:
    """A power series known exactly through the coefficient of x^order.

    Arithmetic never reads or writes coefficients beyond the order;
    binary operations between series of different orders truncate to the
    smaller one.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        else:
            cs = cs[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((0, 1), order)

    @classmethod
    def monomial(cls, exponent: int, order: int = DEFAULT_ORDER,
                 coeff=1) -> "TruncatedSeries":
        return cls((0,) * exponent + (coeff,), order)

    @classmethod
    def from_polynomial(cls, p: Polynomial,
                        order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    # -- basics -------------------------------------------------------

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other, order):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((other,), order)
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_polynomial(other, order)
        return NotImplemented

    def _pair(self, other):
        other = self._coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented, None
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return TruncatedSeries(
            tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return TruncatedSeries(
            tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.order
        cs = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j in range(n + 1 - i):
                y = b.coeffs[j]
                if y != 0:
                    cs[i + j] += x * y
        return TruncatedSeries(cs, n)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not a unit")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for m in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                if self.coeffs[j] != 0:
                    acc += self.coeffs[j] * inv[m - j]
            inv[m] = -acc / c0
        return TruncatedSeries(inv, n)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def shift(self, exponent: int) -> "TruncatedSeries":
        """Multiply by x^exponent, keeping the truncation order."""
        if exponent < 0:
            raise ValueError("negative shift")
        return TruncatedSeries((0,) * exponent + self.coeffs, self.order)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Functional alias for :meth:`TruncatedSeries.invert`."""
    return s.invert()
