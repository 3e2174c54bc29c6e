"""Linear algebra over truncated series and the rational-function field."""

from __future__ import annotations

from convexenum.exact.polynomial import Polynomial
from convexenum.exact.ratfun import RationalFunction
from convexenum.exact.series import TruncatedSeries


class NonUnitDeterminantError(ValueError):
    """Raised when elimination cannot find a pivot that is a unit."""


class SeriesMatrix:
    """A rectangular grid of entries sharing one truncation order.

    Entries are :class:`TruncatedSeries`; exact (polynomial) variants of
    the algorithms below take plain nested lists instead.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix must be nonempty")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        orders = {e.order for row in entries for e in row
                  if isinstance(e, TruncatedSeries)}
        if len(orders) > 1:
            raise ValueError("entries must share one truncation order")
        order = orders.pop() if orders else None
        if order is not None:
            entries = [
                [e if isinstance(e, TruncatedSeries)
                 else TruncatedSeries._coerce(e, order)
                 for e in row]
                for row in entries
            ]
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(tuple(r) for r in entries))

    def __setattr__(self, name, value):
        raise AttributeError("SeriesMatrix is immutable")

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    @property
    def order(self):
        for row in self.entries:
            for e in row:
                if isinstance(e, TruncatedSeries):
                    return e.order
        return None


def solve_series_system(m: SeriesMatrix, rhs) -> list[TruncatedSeries]:
    """Solve M * F = rhs over truncated series.

    Requires a square system whose determinant is a unit in the series
    ring; elimination pivots only on entries with a nonzero constant
    term, so a failure to find such a pivot is exactly a non-unit
    determinant.
    """
    if m.rows != m.cols:
        raise ValueError("system matrix must be square")
    n = m.rows
    if len(rhs) != n:
        raise ValueError("right-hand side length mismatch")
    a = [list(row) for row in m.entries]
    b = list(rhs)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col].coeffs[0] != 0), None)
        if piv is None:
            raise NonUnitDeterminantError(
                f"no unit pivot in column {col}; determinant has zero constant term")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = a[col][col].invert()
        a[col] = [e * inv for e in a[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r == col or a[r][col].is_zero():
                continue
            f = a[r][col]
            a[r] = [e - f * p for e, p in zip(a[r], a[col])]
            b[r] = b[r] - f * b[col]
    return b


def solve_field_system(matrix, rhs):
    """Gaussian elimination over any field (entries support /, ==, bool).

    ``matrix`` is a square nested list; raises on a singular matrix.
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    b = list(rhs)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise NonUnitDeterminantError(f"singular system at column {col}")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        p = a[col][col]
        a[col] = [e / p for e in a[col]]
        b[col] = b[col] / p
        for r in range(n):
            if r == col or not a[r][col]:
                continue
            f = a[r][col]
            a[r] = [e - f * pe for e, pe in zip(a[r], a[col])]
            b[r] = b[r] - f * b[col]
    return b


def matrix_resolvent_row(m, row: int) -> list[RationalFunction]:
    """Row ``row`` of (I - Mx)^{-1} as exact rational functions.

    ``m`` is a square nested list of polynomial (or integer) entries,
    typically an adjacency matrix; the resolvent row generates walk
    counts out of vertex ``row``.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    x = Polynomial.x()
    # Solve (I - Mx)^T y = e_row; then y_j = [(I - Mx)^{-1}]_{row, j}.
    sys = [
        [RationalFunction((1 if i == j else 0) - RationalFunction._as_poly(m[j][i]) * x)
         for j in range(n)]
        for i in range(n)
    ]
    rhs = [RationalFunction(1 if i == row else 0) for i in range(n)]
    return solve_field_system(sys, rhs)
