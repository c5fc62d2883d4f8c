import random

import pytest
from hypothesis import given, settings, strategies as st

from mscs.consistency import verify_scs
from mscs.fast import (
    CombTables, OverlayGraph, path_valid_pair, segment_mscs, solve_mscs_comb, solve_mscs_cycle,
    solve_mscs_path, solve_mscs_spider,
)
from mscs.generators import generate
from mscs.graph import ColoredGraph, DistanceOracle, blocks, recognize
from mscs.oracle import brute_mscs
from mscs.tree_dp import INF, TreeSolver, solve_mscs_tree
from conftest import cycle_graph, path_graph, star_graph

color_lists = st.lists(st.integers(0, 2), min_size=1, max_size=14)


class TestValidPair:
    def test_mirror(self):
        assert path_valid_pair([0, 0, 1, 1], 1) == 2

    def test_out_of_range(self):
        assert path_valid_pair([0, 0, 0, 1], 0) is None

    def test_adjacent_to_boundary(self):
        assert path_valid_pair([0, 0, 0, 1, 1, 1], 2) == 3

    def test_last_block_has_no_partner(self):
        assert path_valid_pair([0, 1], 1) is None

    @settings(max_examples=200, deadline=None)
    @given(color_lists, st.data())
    def test_partner_is_strictly_separated(self, colors, data):
        i = data.draw(st.integers(0, len(colors) - 1))
        k = path_valid_pair(colors, i)
        if k is None:
            return
        g = path_graph(colors)
        assert verify_scs(path_graph(colors[i:k + 1]), [0, k - i]).holds
        assert colors[k] != colors[i]


class TestOverlay:
    @settings(max_examples=200, deadline=None)
    @given(color_lists)
    def test_arc_count(self, colors):
        h = OverlayGraph.from_colors(colors)
        assert len(h.type1) <= len(colors)
        assert h.arc_count <= 3 * len(colors)

    def test_dummy_weights(self):
        h = OverlayGraph.from_colors([0, 1, 1, 2])
        assert [w for _, _, w in h.type2] == [0, 1, 1, 0]

    def test_type1_arcs_go_forward_to_next_block(self):
        h = OverlayGraph.from_colors([0, 0, 1, 1, 1, 0])
        for i, k in h.type1.items():
            assert k > i and h.block_of[k] == h.block_of[i] + 1


class TestPath:
    def test_monochromatic(self):
        assert solve_mscs_path(path_graph([0] * 7)).size == 1

    def test_three_by_three(self):
        g = path_graph([0] * 3 + [1] * 3 + [0] * 3)
        assert solve_mscs_path(g).size == 3
        assert verify_scs(g, [1, 4, 7]).holds

    def test_alternating(self):
        assert solve_mscs_path(path_graph([0, 1, 0])).size == 3

    def test_single_vertex(self):
        assert solve_mscs_path(path_graph([5])).witness == (0,)

    def test_wrong_class(self):
        with pytest.raises(ValueError):
            solve_mscs_path(star_graph(0, [1, 1, 1]))

    @settings(max_examples=300, deadline=None)
    @given(color_lists)
    def test_matches_oracle(self, colors):
        g = path_graph(colors)
        res = solve_mscs_path(g)
        assert res.size == brute_mscs(g).size
        assert verify_scs(g, res.witness).holds

    @settings(max_examples=300, deadline=None)
    @given(color_lists)
    def test_one_or_two_per_block(self, colors):
        g = path_graph(colors)
        W = solve_mscs_path(g).witness
        bd = blocks(g)
        per = [sum(bd.block_of[v] == b for v in W) for b in range(bd.count)]
        assert all(c in (1, 2) for c in per)
        assert per[bd.block_of[0]] == 1 and per[bd.block_of[g.n - 1]] == 1

    def test_relabelled_path(self):
        g = path_graph([0, 0, 1, 1, 0]).relabel([4, 2, 0, 3, 1])
        assert solve_mscs_path(g).size == brute_mscs(g).size


class TestSegment:
    def test_forced_ends(self):
        cost, pos = segment_mscs([0, 1, 1, 0], True, True)
        assert pos[0] == 0 and pos[-1] == 3 and cost == len(pos)

    def test_lane_floor(self):
        # forced 0 and a second pick in the first block must sit at or beyond the floor
        cost, pos = segment_mscs([0, 0, 0, 0, 1], True, False, 3)
        assert cost is not INF
        assert all(p == 0 or p >= 3 for p in pos if p < 4)

    def test_infeasible(self):
        # the only candidate partner of the forced end lies off the path
        assert segment_mscs([0, 0, 0, 1], True, False, 10)[0] is INF


class TestCycle:
    def test_monochromatic(self):
        assert solve_mscs_cycle(cycle_graph([0] * 6)).size == 1

    def test_two_blocks(self):
        assert solve_mscs_cycle(cycle_graph([0, 0, 1, 1])).size == 2

    def test_alternating(self):
        assert solve_mscs_cycle(cycle_graph([0, 1] * 3)).size == 6

    @settings(max_examples=250, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=3, max_size=14))
    def test_matches_oracle(self, colors):
        g = cycle_graph(colors)
        res = solve_mscs_cycle(g)
        assert res.size == brute_mscs(g).size
        assert verify_scs(g, res.witness).holds


class TestSpider:
    def test_monochromatic(self):
        assert solve_mscs_spider(star_graph(0, [0] * 4)).size == 1

    def test_three_two_legs(self):
        g = ColoredGraph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
                                    [0, 0, 1, 0, 1, 0, 1])
        assert solve_mscs_spider(g).size == brute_mscs(g).size == 6

    def test_star(self):
        assert solve_mscs_spider(star_graph(0, [1, 1, 1])).size == 4

    @pytest.mark.parametrize("seed", range(150))
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = generate("spider", rng.randint(4, 12), rng.randint(2, 3), seed)
        res = solve_mscs_spider(g)
        assert res.size == brute_mscs(g).size == solve_mscs_tree(g).size
        assert verify_scs(g, res.witness).holds


class TestComb:
    def test_plain_path(self):
        g = path_graph([0, 0, 1, 0, 1, 1])
        assert solve_mscs_comb(g).size == solve_mscs_path(g).size

    def test_monochromatic(self):
        assert solve_mscs_comb(generate("comb", 12, 1, 0)).size == 1

    def test_twelve_vertex_comb(self):
        g = generate("comb", 12, 2, 5)
        assert recognize(g, "comb") is not None
        assert solve_mscs_comb(g).size == solve_mscs_tree(g).size == brute_mscs(g).size

    def test_not_a_comb(self):
        with pytest.raises(ValueError):
            solve_mscs_comb(cycle_graph([0, 1, 0]))

    @pytest.mark.parametrize("seed", range(150))
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = generate("comb", rng.randint(6, 12), rng.randint(2, 3), seed)
        res = solve_mscs_comb(g)
        assert res.size == brute_mscs(g).size
        assert verify_scs(g, res.witness).holds

    def test_tables(self):
        rng = random.Random(2)
        for seed in range(20):
            g = generate("comb", rng.randint(6, 25), 2, seed)
            cls = recognize(g, "comb")
            tb = CombTables(g, cls.skeleton, cls.teeth)
            d = DistanceOracle(g)
            solver = TreeSolver(g)
            for x in range(g.n):
                r = tb.column[x]
                for i in range(len(cls.skeleton)):
                    lo, hi = min(r, i), max(r, i)
                    entries = [tb.P[x][t] for t in range(lo, hi + 1)]
                    if None in entries:
                        assert tb.Qinf[x][i] > 0
                    else:
                        assert tb.Q[x][i] == sum(entries)
                for t, s in enumerate(cls.skeleton):
                    assert tb.dist(x, s) == d.d(x, s)
                    if cls.teeth[t]:
                        ref = solver._G(s, cls.teeth[t][0], d.d(x, s))
                        got = tb.P[x][t]
                        assert (got is None and ref is INF) or got == ref + 1
