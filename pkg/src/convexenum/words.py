"""Counting locally convex words over a finite alphabet.

A word is convex with parameter k when every second difference
w[i-1] + w[i+1] - 2*w[i] is at most k.  For k = 0 the stable count on an
alphabet of size p is governed by pairs of integer partitions; the
encode/decode pair below realizes that bijection explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from convexenum.exact.linalg import SeriesMatrix, solve_field_system, solve_series_system
from convexenum.exact.polynomial import Polynomial
from convexenum.exact.ratfun import RationalFunction
from convexenum.exact.series import DEFAULT_ORDER, TruncatedSeries


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters from the alphabet [1, p]."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 1 <= x <= self.alphabet_size:
                raise ValueError(f"letter {x} outside [1, {self.alphabet_size}]")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        sep = "" if self.alphabet_size <= 9 else ","
        return sep.join(str(x) for x in self.letters)


@dataclass(frozen=True)
class IntegerPartition:
    """Parts stored weakly increasing; total is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "{" + ",".join(str(p) for p in self.parts) + "}" if self.parts else "{}"


@dataclass(frozen=True)
class WordGF:
    """Generating-function bundle for fixed (p, k)."""

    p: int
    k: int
    series: TruncatedSeries
    ratfun: RationalFunction | None = field(default=None)


def is_convex_word(w: Word, k: int) -> bool:
    a = w.letters
    return all(a[i - 1] + a[i + 1] - 2 * a[i] <= k for i in range(1, len(a) - 1))


def count_words_bruteforce(n: int, p: int, k: int) -> int:
    """Exact count by DFS with the convexity check applied incrementally."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n == 1:
        return p

    count = 0
    stack = [(a, b) for a in range(1, p + 1) for b in range(1, p + 1)]
    if n == 2:
        return len(stack)
    # each stack item is a path of letters; extend respecting the bound
    paths = [[a, b] for a, b in stack]
    while paths:
        path = paths.pop()
        a, b = path[-2], path[-1]
        hi = min(p, k + 2 * b - a)
        for c in range(1, hi + 1):
            if len(path) + 1 == n:
                count += 1
            else:
                paths.append(path + [c])
    return count


def count_words_dp(n: int, p: int, k: int) -> int:
    """Iterate the first-two-letter recurrence; agrees with brute force."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n == 1:
        return p
    # f[(a, b)] = number of convex words of the current length starting a, b
    f = {(a, b): 1 for a in range(1, p + 1) for b in range(1, p + 1)}
    for _ in range(n - 2):
        g = {}
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                hi = min(p, k + 2 * b - a)
                g[(a, b)] = sum(f[(b, i)] for i in range(1, hi + 1))
        f = g
    return sum(f.values())


def word_gf(p: int, k: int, order: int = DEFAULT_ORDER,
            with_ratfun: bool = False) -> WordGF:
    """Solve the p^2 x p^2 transfer system for the full generating function.

    Unknowns F(a, b) are ordered lexicographically; the solved system is
    summed and the length-0 and length-1 boundary terms added back.
    With ``with_ratfun`` the same system is solved over the
    rational-function field to produce an exact closed form.
    """
    if p < 1:
        raise ValueError("p must be positive")
    pairs = [(a, b) for a in range(1, p + 1) for b in range(1, p + 1)]
    index = {ab: i for i, ab in enumerate(pairs)}
    m = len(pairs)

    def row_support(a, b):
        # F(a,b) - x * sum_{i <= min(p, k+2b-a)} F(b,i) = x^2
        hi = min(p, k + 2 * b - a)
        return [(index[(b, i)], -1) for i in range(1, hi + 1)]

    x = TruncatedSeries.x(order)
    one = TruncatedSeries.one(order)
    rows = []
    for a, b in pairs:
        row = [TruncatedSeries.zero(order)] * m
        row[index[(a, b)]] = one
        for j, sgn in row_support(a, b):
            row[j] = row[j] + sgn * x
        rows.append(row)
    rhs = [TruncatedSeries.monomial(2, order)] * m
    sol = solve_series_system(SeriesMatrix(rows), rhs)
    total = TruncatedSeries((1, p), order)
    for s in sol:
        total = total + s

    ratfun = None
    if with_ratfun:
        px = RationalFunction(Polynomial.x())
        rows_rf = []
        for a, b in pairs:
            row = [RationalFunction.zero()] * m
            row[index[(a, b)]] = row[index[(a, b)]] + 1
            for j, sgn in row_support(a, b):
                row[j] = row[j] + sgn * px
            rows_rf.append(row)
        rhs_rf = [px * px] * m
        sol_rf = solve_field_system(rows_rf, rhs_rf)
        ratfun = RationalFunction(Polynomial((1, p)))
        for s in sol_rf:
            ratfun = ratfun + s
    return WordGF(p=p, k=k, series=total, ratfun=ratfun)


@lru_cache(maxsize=None)
def partition_count(j: int) -> int:
    """Number of integer partitions of j, by a parts-bounded DP."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    # ways[t] = partitions of t into parts considered so far
    ways = [1] + [0] * j
    for part in range(1, j + 1):
        for t in range(part, j + 1):
            ways[t] += ways[t - part]
    return ways[j]


def g0p_stable(p: int) -> int:
    """Stable count of 0-convex words on [p], valid for lengths > 2(p-1)."""
    if p < 1:
        raise ValueError("p must be positive")
    total = 0
    acc = 0
    for m in range(1, p + 1):
        acc += partition_count(m - 1)
        total += acc * acc
    return total


def _prefix_from_partition(m: int, w1: IntegerPartition) -> list[int]:
    # increasing run below the plateau: gaps are the parts, largest first
    out = []
    remaining = w1.total
    for part in sorted(w1.parts, reverse=True):
        out.append(m - remaining)
        remaining -= part
    return out


def encode_word(m: int, w1: IntegerPartition, w2: IntegerPartition,
                n: int, p: int | None = None) -> Word:
    """Build the 0-convex word (prefix)(m...m)(suffix) of length n.

    The increasing prefix realizes partition ``w1`` as its gap sequence
    (largest gap first); the decreasing suffix realizes ``w2`` (smallest
    gap first).  The plateau at the maximum m fills the rest.
    """
    if w1.total >= m or w2.total >= m:
        raise ValueError("partition totals must be less than the maximum m")
    pf = _prefix_from_partition(m, w1)
    sf = [m - s for s in _partial_sums(w2.parts)]
    plateau = n - len(pf) - len(sf)
    if plateau < 1:
        raise ValueError(f"length {n} too small for prefix, plateau and suffix")
    letters = pf + [m] * plateau + sf
    return Word(tuple(letters), p if p is not None else m)


def _partial_sums(parts):
    acc = 0
    out = []
    for x in parts:
        acc += x
        out.append(acc)
    return out


def decode_word(w: Word) -> tuple[int, IntegerPartition, IntegerPartition]:
    """Inverse of :func:`encode_word` on 0-convex words.

    Splits at the maximal plateau and reads both partitions off the gap
    sequences of the flanks.
    """
    if not is_convex_word(w, 0):
        raise ValueError("word is not 0-convex")
    a = w.letters
    if not a:
        raise ValueError("empty word")
    m = max(a)
    first = a.index(m)
    last = len(a) - 1 - a[::-1].index(m)
    if any(a[i] != m for i in range(first, last + 1)):
        raise ValueError("maximum not attained on a contiguous plateau")
    pf = a[:first]
    sf = a[last + 1:]
    gaps1 = [b - c for b, c in zip(pf[1:] + (m,), pf)] if pf else []
    gaps2 = [b - c for b, c in zip((m,) + sf, sf)] if sf else []
    w1 = IntegerPartition(tuple(sorted(gaps1)))
    w2 = IntegerPartition(tuple(sorted(gaps2)))
    return m, w1, w2


def all_convex_words(n: int, p: int, k: int):
    """Yield every k-convex word of length n on [p] (brute force)."""
    if n == 0:
        yield Word((), p)
        return

    def extend(path):
        if len(path) == n:
            yield Word(tuple(path), p)
            return
        if len(path) < 2:
            lo, hi = 1, p
        else:
            lo, hi = 1, min(p, k + 2 * path[-1] - path[-2])
        for c in range(lo, hi + 1):
            yield from extend(path + [c])

    yield from extend([])
