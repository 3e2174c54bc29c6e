"""Tests for convex permutations, the transition digraph, and growth bounds."""

from fractions import Fraction

import networkx as nx
import pytest

from _goldens import (
    BOUND_GF,
    MATRIX_A_ROWS,
    RATES,
    ROOT_DIGITS,
    TABLE_F0,
    TABLE_F1,
    TABLE_F2,
    root_fraction,
)
from convexenum.exact.polynomial import Polynomial
from convexenum.exact.ratfun import RationalFunction
from convexenum.exact.series import TruncatedSeries
from convexenum.perms import (
    DEFAULT_CUTOFF,
    EndpointState,
    Permutation,
    TruncationPolicy,
    all_convex_perms,
    build_digraph,
    canonicalize_state,
    check_subadditivity,
    count_perms_bruteforce,
    count_perms_digraph,
    descend,
    endpoint_state,
    f0_closed,
    gf_bound,
    growth_bounds,
    is_convex_perm,
    is_slow_riser,
    mountain_from_coloring,
    walk_count,
)


class TestPermutationBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation((1, 3))
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))

    def test_reverse_and_str(self):
        p = Permutation((2, 3, 1))
        assert p.reverse().entries == (1, 3, 2)
        assert str(p) == "231"
        assert str(Permutation(tuple(range(1, 11)))) == "1,2,3,4,5,6,7,8,9,10"

    def test_convexity(self):
        assert is_convex_perm(Permutation((1, 2, 4, 3)), 1)
        assert not is_convex_perm(Permutation((2, 1, 3)), 2)  # 1+3-2 = 3
        assert is_convex_perm(Permutation((2, 1, 3)), 3)

    def test_slow_riser(self):
        assert is_slow_riser(Permutation((3, 4, 2, 1)))
        assert not is_slow_riser(Permutation((1, 3, 2)))


class TestCounting:
    def test_closed_form_matches_bruteforce(self):
        for n in range(1, 9):
            assert f0_closed(n) == count_perms_bruteforce(n, 0), n

    def test_bruteforce_matches_digraph(self):
        for k in (1, 2):
            for n in range(1, 9):
                assert count_perms_bruteforce(n, k) == \
                    count_perms_digraph(k, n), (k, n)

    def test_reference_table(self):
        assert [f0_closed(n) for n in range(1, 13)] == TABLE_F0
        assert [count_perms_digraph(1, n) for n in range(1, 13)] == TABLE_F1
        assert [count_perms_digraph(2, n) for n in range(1, 13)] == TABLE_F2

    def test_generator_matches_counts(self):
        for k in range(3):
            for n in range(1, 7):
                got = list(all_convex_perms(n, k))
                assert len(got) == count_perms_bruteforce(n, k)
                assert all(is_convex_perm(p, k) for p in got)


class TestDescendants:
    def test_descend_shifts_and_prepends(self):
        p = Permutation((1, 2, 3))
        assert descend(p, "L", 1).entries == (1, 2, 3, 4)
        assert descend(p, "R", 1).entries == (2, 3, 4, 1)

    def test_descend_respects_convexity(self):
        # 1423: left descent would need 4 - 2*1 <= k
        p = Permutation((1, 4, 3, 2))
        assert descend(p, "L", 1) is None
        assert descend(p, "L", 2) is not None

    def test_descendants_stay_convex(self):
        for k in (1, 2):
            for p in all_convex_perms(6, k):
                for direction in "LR":
                    child = descend(p, direction, k)
                    if child is not None:
                        assert is_convex_perm(child, k)

    def test_mountain_from_coloring(self):
        p = mountain_from_coloring(5, {1, 3})
        assert p.entries == (1, 3, 5, 4, 2)
        with pytest.raises(ValueError):
            mountain_from_coloring(3, {5})


class TestCanonicalization:
    def test_example_state(self):
        s = canonicalize_state(EndpointState(1, 2, 6, 4), 2)
        assert s.tuple == (1, 2, 3, 4)
        assert s.canonical

    def test_seed_is_fixed(self):
        s = canonicalize_state(EndpointState(1, 2, 1, 2), 1)
        assert s.tuple == (1, 2, 1, 2)

    def test_idempotent(self):
        for k in (1, 2):
            for p in all_convex_perms(7, k):
                s = canonicalize_state(endpoint_state(p), k)
                assert canonicalize_state(s, k).tuple == s.tuple

    def test_unrealizable_rejected(self):
        with pytest.raises(ValueError):
            canonicalize_state(EndpointState(5, 1, 1, 5), 1)


class TestDigraph:
    def test_cut_sizes(self):
        for k, nodes in ((1, 22), (2, 23)):
            g = build_digraph(k, truncation=TruncationPolicy(
                DEFAULT_CUTOFF[k], "cut"))
            assert len(g.nodes) == nodes

    def test_loop_adds_one_self_edge(self):
        for k in (1, 2):
            cut = build_digraph(k, truncation=TruncationPolicy(
                DEFAULT_CUTOFF[k], "cut"))
            loop = build_digraph(k, truncation=TruncationPolicy(
                DEFAULT_CUTOFF[k], "loop"))
            assert len(loop.edges) == len(cut.edges) + 1
            # exactly one self-loop is added (the merged bottom class
            # already carries its own)
            cut_loops = {e for e in cut.edges if e[0] == e[1]}
            new_loops = {e for e in loop.edges if e[0] == e[1]} - cut_loops
            assert len(new_loops) == 1
            assert next(iter(new_loops))[2] == "L"

    def test_depth_bounded_walks_match_counts(self):
        g = build_digraph(1, depth=10)
        for n in range(2, 13):
            assert 2 * walk_count(g, n) == TABLE_F1[n - 1]

    def test_matches_reference_adjacency(self):
        reference = nx.DiGraph()
        reference.add_nodes_from(MATRIX_A_ROWS)
        for u, vs in MATRIX_A_ROWS.items():
            for v in vs:
                reference.add_edge(u, v)
        g = build_digraph(1, truncation=TruncationPolicy(
            DEFAULT_CUTOFF[1], "cut"))
        ours = nx.DiGraph()
        ours.add_nodes_from(range(len(g.nodes)))
        for u, v, _ in g.edges:
            ours.add_edge(u, v)
        assert ours.number_of_edges() == reference.number_of_edges()
        assert nx.is_isomorphic(reference, ours)

    def test_dot_export(self):
        g = build_digraph(1, truncation=TruncationPolicy(
            DEFAULT_CUTOFF[1], "loop"))
        dot = g.to_dot()
        assert dot.startswith("digraph")
        assert 'label="12"' in dot
        assert "style=dashed" in dot  # the truncation loop is marked

    def test_needs_depth_or_truncation(self):
        with pytest.raises(ValueError):
            build_digraph(1)
        with pytest.raises(ValueError):
            build_digraph(3, depth=2)


class TestGrowthBounds:
    @pytest.mark.parametrize("k,side", list(BOUND_GF))
    def test_gf_matches_reference(self, k, side):
        order = 30
        nd, dd = BOUND_GF[(k, side)]
        reference = RationalFunction(Polynomial.from_terms(nd),
                                     Polynomial.from_terms(dd))
        x = TruncatedSeries.x(order)
        # reference series counts half-walks; rescale to full counts
        expected = (TruncatedSeries.one(order) + x
                    + 2 * x * x * reference.to_series(order))
        assert gf_bound(k, side).to_series(order) == expected

    def test_lower_bound_undercounts_only_eventually(self):
        lower = gf_bound(1, "lower").to_series(20)
        for n in range(1, 13):
            assert lower[n] <= TABLE_F1[n - 1]
        for n in range(1, 8):
            assert lower[n] == TABLE_F1[n - 1]  # exact before the cut bites
        assert lower[8] < TABLE_F1[7]

    @pytest.mark.parametrize("k", [1, 2])
    def test_certified_roots_and_rates(self, k):
        gb = growth_bounds(k, precision=20)
        for side, (lo, hi) in (("lower", gb.lower_root),
                               ("upper", gb.upper_root)):
            target = root_fraction(k, side)
            assert hi - lo < Fraction(1, 10**20)
            assert abs((lo + hi) / 2 - target) < Fraction(1, 10**18), \
                (k, side, ROOT_DIGITS[(k, side)])
        assert abs(float(gb.lower_rate) - RATES[(k, "lower")]) < 1e-9
        assert abs(float(gb.upper_rate) - RATES[(k, "upper")]) < 1e-9
        assert float(gb.lower_rate) < float(gb.upper_rate)


class TestSubadditivity:
    def test_report_lists_violations(self):
        report = check_subadditivity(2, 12)
        assert not report["holds"]
        assert {"m": 6, "n": 6, "f_mn": 1088, "bound": 900} \
            in report["violations"]
        # every listed violation is a genuine inequality failure
        f = report["counts"]
        for v in report["violations"]:
            assert f[v["m"] + v["n"]] > f[v["m"]] * f[v["n"]]
