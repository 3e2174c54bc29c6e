"""Continued-fraction and small-transfer-matrix generating functions.

The infinite ladder subgraph hanging above the start of the 1-convex
transition digraph supports closed-form walk counts: returns to the
ladder root satisfy a continued-fraction recurrence, and the total walk
count is an explicit sum over ladder levels.  Feeding those series into
a 5x5 weighted transfer matrix reproduces the exact counting series for
1-convex permutations.  The 2-convex analogue has no closed form; its
components are computed by dynamic programming on the explicitly built
subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from convexenum.exact.linalg import SeriesMatrix, solve_series_system
from convexenum.exact.series import DEFAULT_ORDER, TruncatedSeries
from convexenum.perms import (
    _SEED_KEY,
    _canonical_key,
    _key_transitions,
    _SEED,
)


@dataclass(frozen=True)
class TowerSeries:
    """The materialized levels H_1..H_depth of the return recurrence.

    Level j carries the edge weight q^(3+j); the deepest level is
    truncated to 1, which cannot affect coefficients up to the order.
    """

    depth: int
    levels: tuple[TruncatedSeries, ...]
    order: int


def _tower_depth(order: int) -> int:
    # H_j = 1 + O(q^(3+j)), so every level with 3 + j > order is exactly 1
    # to this order, in any product.
    return max(1, order - 3)


def ladder_tower(order: int = DEFAULT_ORDER) -> TowerSeries:
    """Solve H_j = 1 / (1 - q^(3+j) H_{j+1}) bottom-up from a truncated 1."""
    depth = _tower_depth(order)
    h_next = TruncatedSeries.one(order)
    levels: list[TruncatedSeries] = []
    for j in range(depth, 0, -1):
        weight = TruncatedSeries.monomial(3 + j, order)
        h_next = (TruncatedSeries.one(order) - weight * h_next).invert()
        levels.append(h_next)
    levels.reverse()
    return TowerSeries(depth=depth, levels=tuple(levels), order=order)


def bot_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Returns to the ladder root, counted by walk length."""
    return ladder_tower(order).levels[0]


def tot_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """All walks from the ladder root, counted by length.

    Sum over the highest level n+1 reached: q^n forward steps, a
    partial descent of up to n+1 further steps, and independent
    excursions from each level visited.
    """
    tower = ladder_tower(order)
    one = TruncatedSeries.one(order)
    total = TruncatedSeries.zero(order)
    prod = one
    for n in range(order + 1):
        if n + 1 <= tower.depth:
            prod = prod * tower.levels[n]
        # else: deeper levels are 1 to this order
        ramp_len = 1 if n == 0 else n + 2  # 1 + q + ... + q^(n+1)
        ramp = TruncatedSeries([1] * ramp_len, order)
        total = total + ramp.shift(n) * prod
    return total


def f1_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Exact counting series for 1-convex permutations by length."""
    q = TruncatedSeries.x(order)
    bot = bot_series(order)
    tot = tot_series(order)
    one = TruncatedSeries.one(order)
    num = one + bot * q.shift(1) + tot * q
    den = -one + q + bot * q.shift(2)
    return one + q - 2 * q.shift(1) * (num / den)


def m1_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Independent reassembly via the 5x5 weighted transfer matrix.

    The ladder is collapsed into two series-weighted edges (returns, and
    walks that never come back feed a sink); the first-column sum of the
    resolvent is rescaled exactly as for the unweighted matrices.
    """
    q = TruncatedSeries.x(order)
    bot = bot_series(order)
    tot = tot_series(order)
    zero = TruncatedSeries.zero(order)
    one = TruncatedSeries.one(order)
    m = [
        [zero, zero, zero, zero, zero],
        [one, one, zero, zero, one],
        [tot - bot, tot - bot, zero, zero, zero],
        [bot, bot, zero, zero, zero],
        [zero, zero, zero, one, zero],
    ]
    n = len(m)
    system = [
        [(one if i == j else zero) - m[i][j] * q for j in range(n)]
        for i in range(n)
    ]
    rhs = [one if i == 0 else zero for i in range(n)]
    col = solve_series_system(SeriesMatrix(system), rhs)
    total = zero
    for entry in col:
        total = total + entry
    return one + q + 2 * (q * q * total)


# ---------------------------------------------------------------------------
# Walk oracles on the explicitly built ladder subgraphs
# ---------------------------------------------------------------------------

def _digraph_closure(k: int, start_keys, order: int, drop_edges=()):
    """Adjacency over merged state keys reachable within ``order`` steps.

    ``drop_edges`` lists (key, label) out-edges to suppress; used to cut
    the subgraph loose from the rest of the transition digraph.
    """
    adj: dict = {}
    frontier = list(start_keys)
    seen = set(frontier)
    for _ in range(order + 1):
        nxt = []
        for key in frontier:
            if key in adj:
                continue
            base = _SEED if key == _SEED_KEY else key
            outs = [(lab, child) for lab, child in _key_transitions(base, k)
                    if (key, lab) not in drop_edges]
            adj[key] = outs
            for _, child in outs:
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
        if not frontier:
            break
    for key in seen:
        adj.setdefault(key, [])
    return adj


def _walk_dp(adj, start, order: int):
    """Per-length walk counts from ``start``: total, and per ending node."""
    counts = {start: 1}
    totals = [1]
    ending: dict = {key: [0] * (order + 1) for key in adj}
    ending[start][0] = 1
    for step in range(1, order + 1):
        nxt: dict = {}
        for key, c in counts.items():
            for _, child in adj.get(key, ()):
                nxt[child] = nxt.get(child, 0) + c
        counts = nxt
        totals.append(sum(counts.values()))
        for key, c in counts.items():
            ending[key][step] = c
    return totals, ending


def _k1_ladder_root():
    return _canonical_key((1, 2, 2, 3), 1)  # the 1223 node


def ladder_walk_oracle(order: int = 20):
    """Exact (tot, bot) coefficient vectors from the built k=1 subgraph.

    The subgraph is everything reachable from the 1223 node once its
    right (downward) edge is removed; this is the structure the
    continued fractions describe, so it is an independent check on them.
    """
    root = _k1_ladder_root()
    adj = _digraph_closure(1, [root], order, drop_edges={(root, "R")})
    totals, ending = _walk_dp(adj, root, order)
    return totals, ending[root]


def k2_components(order: int = DEFAULT_ORDER, root: str = "1234"):
    """(tot', bot1', bot2') for the 2-convex upper subgraph.

    The subgraph hangs above the 1234 node of the 2-convex digraph;
    returns from the 1245 and 1256 nodes leave it, so their downward
    edges are suppressed and walks ending on those nodes are tracked
    separately.  There is no closed form; the construction itself is the
    oracle.  With the default root 1234 (reached only via its upward
    edge), bot1'/bot2' have zero constant term; ``root="1245"`` counts
    from the first node strictly inside the subgraph instead.
    """
    n1234 = _canonical_key((1, 2, 3, 4), 2)
    n1245 = _canonical_key((1, 2, 4, 5), 2)
    n1256 = _canonical_key((1, 2, 5, 6), 2)
    if root not in ("1234", "1245"):
        raise ValueError("root must be '1234' or '1245'")
    start = n1234 if root == "1234" else n1245
    drop = {(n1234, "R"), (n1245, "R"), (n1256, "R")}
    adj = _digraph_closure(2, [start], order, drop_edges=drop)
    totals, ending = _walk_dp(adj, start, order)
    tot = TruncatedSeries(totals, order)
    bot1 = TruncatedSeries(ending[n1245], order)
    bot2 = TruncatedSeries(ending[n1256], order)
    return tot, bot1, bot2


def f2_formula_series(order: int = DEFAULT_ORDER,
                      root: str = "1234") -> TruncatedSeries:
    """Evaluate the reference closed form for f_2 from the components.

    The closed form is stated in prose that leaves the walk root of the
    component series ambiguous; both rootings are supported so the
    check below can report on each.
    """
    q = TruncatedSeries.x(order)
    one = TruncatedSeries.one(order)
    totp, bot1, bot2 = k2_components(order, root=root)

    def p(exp):  # q^exp
        return TruncatedSeries.monomial(exp, order)

    num = (one + q + p(2) + p(4) * (one + bot2) + p(3) * (one + totp))
    den = (-one + q + p(2) + p(4) - p(7) * bot2
           + p(5) * (bot1 + bot2) - p(6) * (bot1 + bot2))
    return one + q - 2 * p(2) * (num / den)


def f2_exact_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Exact f_2 series from the subgraph components (derived closed form).

    The lower part of the 2-convex digraph is a fixed 5-node system; the
    upper subgraph enters through the node 1234, whose episode weight
    collects the component series: walks that stay inside (including
    partial descents along the two suppressed exit paths) terminate,
    walks ending on 1245 re-enter at 1223 after 3 more steps, and walks
    ending on 1256 re-enter at 1234 after 4 more steps.
    """
    q = TruncatedSeries.x(order)
    one = TruncatedSeries.one(order)
    totp, bot1, bot2 = k2_components(order, root="1245")

    def p(exp):
        return TruncatedSeries.monomial(exp, order)

    # Unknowns: walks from 12, 1223, 1332, 1234, 1532.
    inside = totp + bot1 * (q + p(2)) + bot2 * (q + p(2) + p(3))
    zero = TruncatedSeries.zero(order)
    m = [
        [one, -q, -q, zero, zero],
        [zero, one, -q, -q, zero],
        [zero, -q, one - q, zero, zero],
        [zero, -p(4) * bot1, zero, one - p(5) * bot2, -q],
        [zero, zero, -q, zero, one],
    ]
    rhs = [one, one, one, one + q * inside, one]
    sol = solve_series_system(SeriesMatrix(m), rhs)
    return one + q + 2 * p(2) * sol[0]


def f2_formula_check(order: int = 20) -> dict:
    """Differential report: the reference f_2 closed form vs exact counts.

    The walk-count pipeline is ground truth; the formula side is
    verified, never assumed.  The formula is evaluated under both walk
    rootings of its component series; each gets per-coefficient
    agreement flags and a first-disagreement index.  The q^0 boundary is
    included (both sides use f_2(0) = 1 for the empty permutation).
    """
    from convexenum.perms import count_perms_digraph

    exact = [1] + [count_perms_digraph(2, n) for n in range(1, order + 1)]
    report = {"order": order, "exact": exact, "evaluations": {}}
    for root in ("1234", "1245"):
        formula = f2_formula_series(order, root=root)
        per_coeff = []
        first_mismatch = None
        for n in range(order + 1):
            agree = formula[n] == exact[n]
            if not agree and first_mismatch is None:
                first_mismatch = n
            per_coeff.append({"n": n, "formula": str(formula[n]),
                              "exact": exact[n], "agree": agree})
        report["evaluations"][f"root_{root}"] = {
            "coefficients": per_coeff,
            "first_mismatch": first_mismatch,
            "agrees": first_mismatch is None,
        }
    derived = f2_exact_series(order)
    report["derived_closed_form_agrees"] = all(
        derived[n] == exact[n] for n in range(order + 1))
    report["agrees"] = any(ev["agrees"]
                           for ev in report["evaluations"].values())
    return report
