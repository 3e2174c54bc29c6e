"""Locally convex permutations: checkers, counting, and the
endpoint-state transition digraph behind the growth-rate bounds.

A permutation is convex with parameter k when every second difference is
at most k.  For k <= 2 such permutations are "mountains" (an increasing
run followed by a decreasing run), and their extension behavior is fully
determined by the four endpoint entries (first, second, second-to-last,
last).  Classes of permutations with identical descendant counts are
merged into single digraph nodes; walks from the start node count the
permutations themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from convexenum.exact.linalg import matrix_resolvent_row
from convexenum.exact.polynomial import Polynomial
from convexenum.exact.ratfun import RationalFunction
from convexenum.exact.roots import decimal_value, smallest_positive_root


@dataclass(frozen=True)
class Permutation:
    """A bijection on [1, n] in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"{self.entries} is not a permutation of [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def reverse(self) -> "Permutation":
        return Permutation(self.entries[::-1])

    def __str__(self):
        sep = "" if self.n <= 9 else ","
        return sep.join(str(x) for x in self.entries)


def is_convex_perm(perm: Permutation, k: int) -> bool:
    a = perm.entries
    return all(a[i - 1] + a[i + 1] - 2 * a[i] <= k for i in range(1, len(a) - 1))


def is_slow_riser(perm: Permutation) -> bool:
    a = perm.entries
    return all(a[i + 1] <= a[i] + 1 for i in range(len(a) - 1))


def count_perms_bruteforce(n: int, k: int) -> int:
    """Count k-convex permutations by backtracking with incremental pruning.

    Values are placed left to right; the convexity bound on the next
    entry (at most k + 2*last - prev) prunes the search to valid
    prefixes only.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return 1

    count = 0
    used = [False] * (n + 1)

    def extend(prev: int, last: int, placed: int):
        nonlocal count
        bound = min(n, k + 2 * last - prev)
        for v in range(1, bound + 1):
            if used[v]:
                continue
            if placed + 1 == n:
                count += 1
            else:
                used[v] = True
                extend(last, v, placed + 1)
                used[v] = False

    for first in range(1, n + 1):
        used[first] = True
        for second in range(1, n + 1):
            if second == first:
                continue
            used[second] = True
            if n == 2:
                count += 1
            else:
                extend(first, second, 2)
            used[second] = False
        used[first] = False
    return count


def all_convex_perms(n: int, k: int):
    """Yield every k-convex permutation of length n."""
    if n == 1:
        yield Permutation((1,))
        return
    used = [False] * (n + 1)
    path: list[int] = []

    def extend():
        if len(path) == n:
            yield Permutation(tuple(path))
            return
        if len(path) < 2:
            lo, hi = 1, n
        else:
            lo, hi = 1, min(n, k + 2 * path[-1] - path[-2])
        for v in range(lo, hi + 1):
            if not used[v]:
                used[v] = True
                path.append(v)
                yield from extend()
                path.pop()
                used[v] = False

    yield from extend()


def f0_closed(n: int) -> int:
    """Closed form for the number of 0-convex permutations."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return {1: 1, 2: 2, 3: 4, 4: 6}.get(n, 8)


def descend(perm: Permutation, direction: str, k: int) -> Permutation | None:
    """Left/right descendant if it stays k-convex, else None.

    L prepends 1 after shifting every entry up; R appends 1 likewise.
    Validity only depends on the relevant end pair.
    """
    e = perm.entries
    if direction == "L":
        if e[1] - 2 * e[0] > k:
            return None
        return Permutation((1,) + tuple(x + 1 for x in e))
    if direction == "R":
        if e[-2] - 2 * e[-1] > k:
            return None
        return Permutation(tuple(x + 1 for x in e) + (1,))
    raise ValueError("direction must be 'L' or 'R'")


def mountain_from_coloring(n: int, red: set[int]) -> Permutation:
    """Mountain permutation from a 2-coloring of [n-1].

    Red values ascend, then n, then the blue values descend.
    """
    if not red <= set(range(1, n)):
        raise ValueError("red set must be a subset of [1, n-1]")
    blue = sorted(set(range(1, n)) - red, reverse=True)
    return Permutation(tuple(sorted(red)) + (n,) + tuple(blue))


# ---------------------------------------------------------------------------
# Endpoint states and the identically-descending digraph
# ---------------------------------------------------------------------------

_SEED = (1, 2, 1, 2)  # endpoint tuple of the permutation 12
_SEED_KEY = "12"  # sentinel: the start node is never merged with a class


@dataclass(frozen=True)
class EndpointState:
    """Canonical (first, second, second-to-last, last) quadruple.

    For length-3 permutations the middle entry fills both inner slots;
    the start permutation 12 maps to the degenerate tuple (1, 2, 1, 2).
    """

    a: int
    b: int
    c: int
    d: int
    canonical: bool = field(default=False, compare=False)

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self):
        return "".join(str(x) for x in self.tuple)


def endpoint_state(perm: Permutation) -> EndpointState:
    e = perm.entries
    if len(e) < 2:
        raise ValueError("need length at least 2")
    return EndpointState(e[0], e[1], e[-2], e[-1])


@lru_cache(maxsize=None)
def _realizable(t: tuple[int, int, int, int], k: int) -> bool:
    """Whether some k-convex mountain permutation has these endpoints.

    Valid for k <= 2, where convex permutations are exactly the convex
    mountains: a sorted ascent set followed by the remaining values in
    decreasing order.
    """
    a, b, c, d = t
    if min(t) < 1:
        return False
    if t == _SEED:
        return True
    if b == c:  # length-3 shape: the middle entry fills both inner slots
        if sorted((a, b, d)) != [1, 2, 3]:
            return False
        return a + d - 2 * b <= k
    if len({a, b, c, d}) < 4:
        return False
    if c < d:
        # ends ascending, so the whole permutation ascends: identity only
        return (a, b, c) == (1, 2, d - 1) and d >= 4
    if a > b:
        # starts descending: reverse identity only
        return (b, c, d) == (a - 1, 2, 1) and a >= 4

    # General mountain search.  Values below both b and c cannot be
    # placed at all; values below b go to the descent, values below c to
    # the ascent, values above max(b, c) are free.
    hi = max(t)
    for n in range(hi, hi + 7):
        fixed = {a, b, c, d}
        forced_desc, forced_asc, free = [], [], []
        ok = True
        for v in range(1, n + 1):
            if v in fixed:
                continue
            below_b, below_c = v < b, v < c
            if below_b and below_c:
                ok = False
                break
            if below_b:
                forced_desc.append(v)
            elif below_c:
                forced_asc.append(v)
            else:
                free.append(v)
        if not ok:
            continue
        base_asc = sorted([a, b] + forced_asc)
        base_desc = sorted([c, d] + forced_desc)
        for mask in range(1 << len(free)):
            asc = list(base_asc)
            desc = list(base_desc)
            for i, v in enumerate(free):
                (desc if mask >> i & 1 else asc).append(v)
            seq = sorted(asc) + sorted(desc, reverse=True)
            if seq[0] != a or seq[1] != b or seq[-2] != c or seq[-1] != d:
                continue
            if all(seq[i - 1] + seq[i + 1] - 2 * seq[i] <= k
                   for i in range(1, len(seq) - 1)):
                return True
    return False


# Internal merged representation: (a, b, c, d) where b is None when all
# left-descending second entries collapse to one class, and c is None
# likewise for right-descending second-to-last entries.

def _star(t, k):
    a, b, c, d = t
    b2 = None if (b is not None and b - 2 * a <= k) else b
    c2 = None if (c is not None and c - 2 * d <= k) else c
    return (a, b2, c2, d)


def _key_sort(t):
    return tuple(0 if v is None else v for v in t)


def _canonical_key(t, k):
    """Reversal-minimal starred tuple; merged nodes compare equal."""
    cands = [_star(t, k), _star((t[3], t[2], t[1], t[0]), k)]
    return min(cands, key=_key_sort)


def _key_transitions(t, k):
    """Out-edges of a merged state, labeled in canonical orientation."""
    a, b, c, d = t
    out = []
    if b is None or b - 2 * a <= k:  # left descent
        child = (1, a + 1, None if c is None else c + 1, d + 1)
        out.append(("L", _canonical_key(child, k)))
    if c is None or c - 2 * d <= k:  # right descent
        child = (a + 1, None if b is None else b + 1, d + 1, 1)
        out.append(("R", _canonical_key(child, k)))
    return out


@lru_cache(maxsize=None)
def _least_concrete(key, k) -> tuple[int, int, int, int]:
    """Smallest realizable endpoint tuple in a merged class."""
    a, b, c, d = key
    b_opts = [b] if b is not None else [
        v for v in range(1, 2 * a + k + 1) if v - 2 * a <= k and v not in (a, d)]
    best = None
    for bv in sorted(b_opts):
        if c is not None:
            c_opts = [c]
        else:
            c_opts = [v for v in range(1, 2 * d + k + 1)
                      if v - 2 * d <= k and v not in (a, d)]
        for cv in sorted(c_opts):
            cand = (a, bv, cv, d)
            if _realizable(cand, k):
                best = cand
                break
        if best is not None:
            break
    if best is None:
        raise ValueError(f"no realizable representative for class {key}")
    return best


def canonicalize_state(s: EndpointState, k: int) -> EndpointState:
    """Smallest endpoint state identically-descending with ``s``.

    Applies reversal symmetry, then replaces the mutable end entries
    (second-to-last when the state right-descends, second when it left
    descends) by the least values that keep the state realizable.
    """
    if s.tuple == _SEED or s.tuple == _SEED[::-1]:
        return EndpointState(*_SEED, canonical=True)
    if not _realizable(s.tuple, k):
        raise ValueError(f"state {s} is not realizable for k={k}")
    key = _canonical_key(s.tuple, k)
    return EndpointState(*_least_concrete(key, k), canonical=True)


@dataclass(frozen=True)
class TruncationPolicy:
    """Where and how to make the infinite digraph finite.

    ``cutoff`` names the node whose ladder-ascending (left) edge is
    deleted.  Mode "cut" stops there, undercounting walks.  Mode "loop"
    additionally adds a self-loop at the deepest node of the cutoff's
    return path, which dominates the lost walks asymptotically and
    yields an upper bound on the growth rate.
    """

    cutoff: tuple[int, int, int, int]
    mode: str = "cut"

    def __post_init__(self):
        if self.mode not in ("cut", "loop"):
            raise ValueError("mode must be 'cut' or 'loop'")


#: Truncation points matching the published bound computations.
DEFAULT_CUTOFF = {1: (1, 2, 6, 7), 2: (1, 2, 7, 8)}


@dataclass(frozen=True)
class DescendantDigraph:
    """Finite piece of the identically-descending transition digraph."""

    k: int
    nodes: tuple  # merged state keys, BFS order; index 0 is the start
    labels: tuple[str, ...]
    edges: tuple  # (from_index, to_index, "L"/"R")
    truncation: TruncationPolicy | None = None

    @property
    def start(self) -> int:
        return 0

    def adjacency(self) -> list[list[int]]:
        m = [[0] * len(self.nodes) for _ in self.nodes]
        for u, v, _ in self.edges:
            m[u][v] += 1
        return m

    def to_dot(self) -> str:
        lines = ["digraph descendants {"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for u, v, lab in self.edges:
            style = ""
            if self.truncation and self.truncation.mode == "loop" and u == v:
                style = ", style=dashed"
            lines.append(f'  n{u} -> n{v} [label="{lab}"{style}];')
        lines.append("}")
        return "\n".join(lines)


def build_digraph(k: int, depth: int | None = None,
                  truncation: TruncationPolicy | None = None,
                  max_nodes: int = 10_000) -> DescendantDigraph:
    """BFS the transition digraph from the start state (permutation 12).

    Without a truncation policy, expansion stops after ``depth``
    generations (the graph is infinite).  With one, the edited graph is
    explored to closure; left edges are explored before right edges.
    """
    if k not in (1, 2):
        raise ValueError("digraph machinery requires k in {1, 2}")
    if truncation is None and depth is None:
        raise ValueError("need a depth bound or a truncation policy")
    cutoff_key = (_canonical_key(truncation.cutoff, k)
                  if truncation is not None else None)

    nodes = [_SEED_KEY]
    index = {_SEED_KEY: 0}
    edges = []
    frontier = [0]
    generation = 0
    while frontier:
        if depth is not None and generation >= depth:
            break
        nxt = []
        for u in frontier:
            key = nodes[u]
            transitions = (_key_transitions(_SEED, k) if key == _SEED_KEY
                           else _key_transitions(key, k))
            for label, child in transitions:
                if cutoff_key is not None and key == cutoff_key and label == "L":
                    continue  # both truncation modes sever the ladder here
                if child not in index:
                    if len(nodes) >= max_nodes:
                        raise RuntimeError("node budget exceeded")
                    index[child] = len(nodes)
                    nodes.append(child)
                    nxt.append(index[child])
                edges.append((u, index[child], label))
        frontier = nxt
        generation += 1

    if truncation is not None and truncation.mode == "loop":
        # self-loop at the deepest node of the cutoff's return path
        out = {}
        for u, v, _ in edges:
            out.setdefault(u, []).append(v)
        cur = out[index[cutoff_key]][0]
        while len(out.get(out[cur][0], ())) == 1:
            cur = out[cur][0]
        edges.append((cur, cur, "L"))

    labels = tuple(
        "12" if key == _SEED_KEY
        else "".join(str(x) for x in _least_concrete(key, k))
        for key in nodes
    )
    return DescendantDigraph(k=k, nodes=tuple(nodes), labels=labels,
                             edges=tuple(edges), truncation=truncation)


def walk_count(g: DescendantDigraph, n: int) -> int:
    """Walks of length n-2 from the start node; equals f_k(n)/2 for n >= 2.

    The start node stands for the permutation 12, and every edge extends
    the permutation by one entry.  The digraph must be untruncated and
    deep enough (depth >= n-2) for the count to be exact.
    """
    if n < 2:
        raise ValueError("walk counts are defined for n >= 2")
    counts = [0] * len(g.nodes)
    counts[g.start] = 1
    out = {}
    for u, v, _ in g.edges:
        out.setdefault(u, []).append(v)
    for _ in range(n - 2):
        nxt = [0] * len(g.nodes)
        for u, cu in enumerate(counts):
            if cu:
                for v in out.get(u, ()):
                    nxt[v] += cu
        counts = nxt
    return sum(counts)


def count_perms_digraph(k: int, n: int) -> int:
    """f_k(n) via the transition digraph (k in {1, 2})."""
    if n == 1:
        return 1
    g = build_digraph(k, depth=n - 2)
    return 2 * walk_count(g, n)


# ---------------------------------------------------------------------------
# Rational bounds on the growth constant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthBounds:
    k: int
    lower_gf: RationalFunction
    upper_gf: RationalFunction
    lower_root: tuple[Fraction, Fraction]
    upper_root: tuple[Fraction, Fraction]
    lower_rate: str
    upper_rate: str


@lru_cache(maxsize=None)
def gf_bound(k: int, side: str,
             cutoff: tuple[int, int, int, int] | None = None) -> RationalFunction:
    """Rational generating function bounding f_k(n) from below or above.

    The truncated (cut) digraph undercounts walks, the loop-augmented one
    overcounts; the first-row resolvent sum W of the adjacency matrix is
    rescaled to full counts as 1 + x + 2 x^2 W(x).
    """
    if side not in ("lower", "upper"):
        raise ValueError("side must be 'lower' or 'upper'")
    policy = TruncationPolicy(cutoff or DEFAULT_CUTOFF[k],
                              mode="cut" if side == "lower" else "loop")
    g = build_digraph(k, truncation=policy)
    row = matrix_resolvent_row(g.adjacency(), g.start)
    walks = RationalFunction.zero()
    for entry in row:
        walks = walks + entry
    x = RationalFunction(Polynomial.x())
    return RationalFunction(Polynomial((1, 1))) + 2 * x * x * walks


def growth_bounds(k: int, precision: int = 20) -> GrowthBounds:
    """Certified interval bounds on the exponential growth rate of f_k."""
    lower = gf_bound(k, "lower")
    upper = gf_bound(k, "upper")
    lo_root = smallest_positive_root(lower.den, precision)
    up_root = smallest_positive_root(upper.den, precision)
    # rate bounds are reciprocals: the smaller root gives the larger rate
    return GrowthBounds(
        k=k,
        lower_gf=lower,
        upper_gf=upper,
        lower_root=lo_root,
        upper_root=up_root,
        lower_rate=decimal_value(1 / lo_root[1], 10),
        upper_rate=decimal_value(1 / up_root[0], 10),
    )


def check_subadditivity(k: int, max_n: int) -> dict:
    """Probe f_k(m+n) <= f_k(m) f_k(n) for all splits; report violations.

    This is a report, not an assertion: the inequality is checked as
    stated and any failing split is listed.
    """
    f = {n: count_perms_digraph(k, n) for n in range(1, max_n + 1)}
    violations = [
        {"m": m, "n": n, "f_mn": f[m + n], "bound": f[m] * f[n]}
        for m in range(1, max_n)
        for n in range(m, max_n - m + 1)
        if f[m + n] > f[m] * f[n]
    ]
    return {"k": k, "max_n": max_n, "counts": f, "violations": violations,
            "holds": not violations}
