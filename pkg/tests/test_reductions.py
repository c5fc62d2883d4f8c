import itertools
import json
import random
import re
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mscs.consistency import verify_cs
from mscs.graph import ColoredGraph, DistanceOracle
from mscs.oracle import brute_dominating, brute_max2sat, brute_mcs, brute_mscs
from mscs.reductions import (
    certify_reduction, check_forward_witness, check_max2sat_structure, default_stabilizers,
    dominating_to_mcs, dominating_to_mscs, forward_witness, max2sat_target_size, max2sat_to_tree_mcs,
)
from conftest import connected_graphs, cycle_graph

EXAMPLE = [(1, 2), (1, -3), (-2, -3)]


def complete(n):
    return ColoredGraph.from_edges(n, list(itertools.combinations(range(n), 2)), [0] * n)


def c4():
    return cycle_graph([0] * 4)


@st.composite
def formulas(draw, max_n=4, max_m=4):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(1, max_m))
    clauses = []
    for _ in range(m):
        a, b = draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
        clauses.append((a * draw(st.sampled_from([1, -1])), b * draw(st.sampled_from([1, -1]))))
    return n, clauses


class TestDominatingToMcs:
    def test_triangle(self):
        inst = dominating_to_mcs(complete(3))
        assert inst.target.n == 4
        assert brute_mcs(inst.target).size == 2
        assert certify_reduction(inst, 1)

    def test_four_cycle(self):
        assert brute_mcs(dominating_to_mcs(c4()).target).size == 3

    def test_single_vertex(self):
        inst = dominating_to_mcs(complete(1))
        assert inst.target.n == 2 and brute_mcs(inst.target).size == 2

    def test_apex(self):
        inst = dominating_to_mcs(c4())
        apex = inst.meta["apex"]
        assert inst.target.degree(apex) == 4 and inst.target.colors[apex] == 2

    def test_wrong_source_optimum_is_flagged(self):
        assert not certify_reduction(dominating_to_mcs(c4()), 1)

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=6, max_colors=1))
    def test_identity(self, g):
        inst = dominating_to_mcs(g)
        assert brute_mcs(inst.target).size == brute_dominating(g).size + 1


class TestDominatingToMscs:
    def test_default_weights(self):
        inst = dominating_to_mscs(complete(3))
        assert inst.meta["weights"] == {"copy": 2, "cross": 4, "singleton": 1}
        assert inst.target.n == 7

    def test_triangle(self):
        inst = dominating_to_mscs(complete(3))
        assert brute_mscs(inst.target).size == 2
        assert certify_reduction(inst, 1)

    def test_four_cycle_undershoots(self):
        # a second-copy vertex sits 4 from the first copy but 5 from the singleton
        # through a neighbour, so a distance-2 dominating set suffices here
        inst = dominating_to_mscs(c4())
        assert brute_mscs(inst.target).size == 2
        assert brute_dominating(c4()).size == 2

    def test_cross_and_singleton_distances(self):
        g = c4()
        inst = dominating_to_mscs(g)
        d = DistanceOracle(inst.target)
        n = g.n
        for u in range(n, 2 * n):
            assert min(d.d(u, v) for v in range(n)) == 4
            assert d.d(u, inst.meta["singleton"]) == 1

    @pytest.mark.parametrize("eps,scale", [(Fraction(1, 3), 2), (Fraction(1, 2), 2), (Fraction(0), 2),
                                           (Fraction(1, 4), 0)])
    def test_bad_parameters(self, eps, scale):
        with pytest.raises(ValueError):
            dominating_to_mscs(complete(2), eps, scale)

    def test_other_scale(self):
        inst = dominating_to_mscs(complete(2), Fraction(1, 3), 3)
        assert inst.meta["weights"] == {"copy": 3, "cross": 5, "singleton": 2}


class TestMax2Sat:
    def test_example_size(self):
        inst = max2sat_to_tree_mcs(3, EXAMPLE, M=4)
        assert inst.target.n == 3 * (8 + 8) + 21 * 3 + 3
        k, assignment = brute_max2sat(3, EXAMPLE)
        assert k == 3
        assert inst.expected_size(k) == 3 * 4 + 13
        holds, size, expected = check_forward_witness(inst, assignment)
        assert holds and size == expected == 25

    def test_default_stabilizers(self):
        inst = max2sat_to_tree_mcs(3, EXAMPLE)
        assert inst.meta["M"] == default_stabilizers(3, 3) == 28

    def test_one_clause_size(self):
        assert max2sat_to_tree_mcs(2, [(1, -2)], M=1).target.n == 44

    @pytest.mark.parametrize("clauses", [[(1, 1)], [(1, -1)], [(1, 4)], [(0, 1)], [(1,)]])
    def test_malformed(self, clauses):
        with pytest.raises(ValueError):
            max2sat_to_tree_mcs(3, clauses, M=1)

    def test_bad_stabilizer_count(self):
        with pytest.raises(ValueError):
            max2sat_to_tree_mcs(2, [(1, 2)], M=0)

    def test_meta_ids_valid(self):
        inst = max2sat_to_tree_mcs(3, EXAMPLE, M=2)
        assert all(0 <= v < inst.target.n for v in inst.meta["ids"].values())
        assert len(set(inst.meta["ids"].values())) == inst.target.n
        json.dumps(inst.sidecar())

    def test_target_formula(self):
        assert max2sat_target_size(2, 3, 1, 3) == 2 * 3 + 6 + 1
        assert max2sat_target_size(2, 3, 1, 0) == 2 * 3 + 9 + 1

    @settings(max_examples=80, deadline=None)
    @given(formulas(), st.integers(1, 3))
    def test_structure_and_forward_witness(self, formula, M):
        n, clauses = formula
        inst = max2sat_to_tree_mcs(n, clauses, M)
        assert check_max2sat_structure(inst) == []
        for bits in itertools.product([False, True], repeat=n):
            holds, size, expected = check_forward_witness(inst, bits)
            assert holds and size == expected

    def test_corrupted_instance_is_flagged(self):
        inst = max2sat_to_tree_mcs(2, [(1, 2)], M=2)
        ids = inst.meta["ids"]
        drop = ids["sbar1^2"]
        keep = [v for v in range(inst.target.n) if v != drop]
        remap = {v: i for i, v in enumerate(keep)}
        edges = [(remap[u], remap[v]) for u, v, _ in inst.target.edges() if drop not in (u, v)]
        colors = [inst.target.colors[v] for v in keep]
        broken_meta = dict(inst.meta, ids={k: remap[v] for k, v in ids.items() if v != drop})
        broken_meta["ids"]["sbar1^2"] = broken_meta["ids"]["sbar1^1"]
        broken = type(inst)(inst.kind, ColoredGraph.from_edges(len(keep), edges, colors), inst.problem,
                            broken_meta, inst.formula)
        assert check_max2sat_structure(broken)

    def test_gadget_properties_of_forward_witnesses(self):
        rng = random.Random(1)
        for _ in range(40):
            n = rng.randint(2, 4)
            clauses = [tuple(v * rng.choice([1, -1]) for v in rng.sample(range(1, n + 1), 2))
                       for _ in range(rng.randint(1, 4))]
            inst = max2sat_to_tree_mcs(n, clauses, rng.randint(1, 3))
            ids = inst.meta["ids"]
            bits = [rng.random() < 0.5 for _ in range(n)]
            W = set(forward_witness(inst, bits))
            assert ids["v3"] in W
            for i in range(1, len(clauses) + 1):
                gadget = {ids[f"{p}{i}^{a}"] for p in "yzw" for a in range(1, 8)}
                assert 2 <= len(W & gadget) <= 3
            for i in range(1, n + 1):
                pos = any(ids[f"s{i}^{j}"] in W for j in range(1, inst.meta["M"] + 1))
                neg = any(ids[f"sbar{i}^{j}"] in W for j in range(1, inst.meta["M"] + 1))
                assert pos != neg


def _mirror_name(name):
    if name.startswith("xbar"):
        return "x" + name[4:]
    if name.startswith("sbar"):
        return "s" + name[4:]
    if re.match(r"[xs]\d", name):
        return name[0] + "bar" + name[1:]
    return name


@settings(max_examples=40, deadline=None)
@given(formulas(), st.integers(1, 3))
def test_stabilizer_symmetry(formula, M):
    n, clauses = formula
    a = max2sat_to_tree_mcs(n, clauses, M)
    b = max2sat_to_tree_mcs(n, [(-y, -z) for y, z in clauses], M)
    ia, ib = a.meta["ids"], b.meta["ids"]
    sigma = {ia[name]: ib[_mirror_name(name)] for name in ia}
    assert sorted(sigma.values()) == list(range(b.target.n))
    ea = {frozenset((sigma[u], sigma[v])) for u, v, _ in a.target.edges()}
    eb = {frozenset((u, v)) for u, v, _ in b.target.edges()}
    assert ea == eb
    pairs = {(a.target.colors[v], b.target.colors[sigma[v]]) for v in range(a.target.n)}
    assert len({p[0] for p in pairs}) == len(pairs) == len({p[1] for p in pairs})
