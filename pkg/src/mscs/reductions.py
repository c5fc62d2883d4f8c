"""Instance generators for the three hardness constructions.

* dominating set -> MCS: add an apex of a second color joined to everything.
* dominating set -> weighted MSCS: two copies of the graph joined completely,
  plus one extra vertex attached to the second copy.
* MAX-2SAT -> MCS on trees: variable, clause and central gadgets.

Each generator returns a :class:`ReductionInstance` whose ``meta`` maps
gadget names to target vertex ids.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .consistency import verify_cs
from .graph import ColoredGraph, DistanceOracle
from .oracle import DEFAULT_CAP, brute_mcs, brute_mscs, check_2cnf, count_satisfied, literal_true


@dataclass(frozen=True)
class ReductionInstance:
    kind: str
    target: ColoredGraph
    problem: str                      # optimum measured on the target: "mcs" or "mscs"
    meta: dict = field(default_factory=dict)
    formula: str = ""                 # closed form of expected_size, for reports

    def expected_size(self, source_opt: int) -> int:
        if self.kind == "max2sat-to-tree":
            n, m, M = self.meta["n_vars"], self.meta["n_clauses"], self.meta["M"]
            return max2sat_target_size(n, m, M, source_opt)
        return source_opt + 1

    def sidecar(self) -> dict:
        """JSON-ready description of the construction."""
        return {"kind": self.kind, "problem": self.problem, "formula": self.formula,
                "vertices": self.target.n, **self.meta}


def dominating_to_mcs(g: ColoredGraph) -> ReductionInstance:
    """Apex ``n`` (color 2) adjacent to every vertex of ``g`` (all color 1)."""
    n = g.n
    edges = [(u, v) for u, v, _ in g.edges()] + [(v, n) for v in range(n)]
    target = ColoredGraph.from_edges(n + 1, edges, [1] * n + [2])
    return ReductionInstance("dominating-to-mcs", target, "mcs",
                             {"apex": n, "source_n": n}, "gamma + 1")


def dominating_to_mscs(g: ColoredGraph, eps: Fraction = Fraction(1, 4), scale: int = 2) -> ReductionInstance:
    """Two copies of ``g`` joined completely, plus a singleton on the second copy.

    Copy one (ids ``0..n-1``) has color 0; copy two (``n..2n-1``) and the
    singleton ``2n`` have color 1. Edge weights are ``scale`` inside a copy,
    ``(3 - 4 eps) scale`` across the copies and ``2 eps scale`` to the singleton.
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise ValueError(f"eps must lie strictly between 0 and 1/2, got {eps}")
    weights = {"copy": Fraction(scale), "cross": (3 - 4 * eps) * scale, "single": 2 * eps * scale}
    for name, w in weights.items():
        if w.denominator != 1 or w <= 0:
            raise ValueError(f"scale {scale} gives a non-integer or non-positive {name} weight {w}")
    wc, wx, ws = (int(weights[k]) for k in ("copy", "cross", "single"))
    n = g.n
    edges = []
    for u, v, _ in g.edges():
        edges.append((u, v, wc))
        edges.append((u + n, v + n, wc))
    edges += [(u, v + n, wx) for u in range(n) for v in range(n)]
    edges += [(v + n, 2 * n, ws) for v in range(n)]
    target = ColoredGraph.from_edges(2 * n + 1, edges, [0] * n + [1] * (n + 1), weighted=True)
    meta = {"singleton": 2 * n, "source_n": n, "eps": str(eps), "scale": scale,
            "weights": {"copy": wc, "cross": wx, "singleton": ws}}
    return ReductionInstance("dominating-to-mscs", target, "mscs", meta, "gamma + 1")


# -- MAX-2SAT ------------------------------------------------------------------

def default_stabilizers(n_vars: int, n_clauses: int) -> int:
    return 3 * (n_vars + n_clauses) + 10


def max2sat_target_size(n: int, m: int, M: int, k: int) -> int:
    """Consistent subset size reached by an assignment satisfying ``k`` clauses."""
    return n * (M + 2) + 2 * k + 3 * (m - k) + 1


def max2sat_to_tree_mcs(n_vars: int, clauses, M: int | None = None) -> ReductionInstance:
    clauses = check_2cnf(n_vars, clauses)
    m = len(clauses)
    if M is None:
        M = default_stabilizers(n_vars, m)
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"stabilizer count must be a positive integer, got {M!r}")

    ids: dict[str, int] = {}
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    next_color = [0]

    def fresh() -> int:
        next_color[0] += 1
        return next_color[0] - 1

    def add(name: str, color: int) -> int:
        ids[name] = len(colors)
        colors.append(color)
        return ids[name]

    def chain(names):
        edges.extend((ids[a], ids[b]) for a, b in zip(names, names[1:]))

    lit_color = {}
    for i in range(1, n_vars + 1):
        cpos, cneg = fresh(), fresh()
        lit_color[i], lit_color[-i] = cpos, cneg
        for a in range(1, 5):
            add(f"x{i}^{a}", cpos)
        for a in range(1, 5):
            add(f"xbar{i}^{a}", cneg)
        chain([f"x{i}^{a}" for a in range(1, 5)])
        chain([f"xbar{i}^{a}" for a in range(1, 5)])
        for j in range(1, M + 1):
            cs = fresh()
            edges.append((add(f"s{i}^{j}", cs), ids[f"x{i}^1"]))
            edges.append((add(f"sbar{i}^{j}", cs), ids[f"xbar{i}^1"]))
    for i, (y, z) in enumerate(clauses, 1):
        cw = fresh()
        for a in range(1, 8):
            add(f"y{i}^{a}", lit_color[y])
        for a in range(1, 8):
            add(f"z{i}^{a}", lit_color[z])
        for a in range(1, 8):
            add(f"w{i}^{a}", cw)
        for p in "yzw":
            chain([f"{p}{i}^{a}" for a in range(1, 8)])
        edges.append((ids[f"y{i}^1"], ids[f"w{i}^2"]))
        edges.append((ids[f"z{i}^1"], ids[f"w{i}^6"]))
    cv = fresh()
    for a in (1, 2, 3):
        add(f"v{a}", cv)
    chain(["v1", "v2", "v3"])
    for i in range(1, n_vars + 1):
        edges.append((ids["v1"], ids[f"x{i}^1"]))
        edges.append((ids["v1"], ids[f"xbar{i}^1"]))
    for i in range(1, m + 1):
        edges.append((ids["v1"], ids[f"w{i}^4"]))

    target = ColoredGraph.from_edges(len(colors), edges, colors)
    expected_n = n_vars * (8 + 2 * M) + 21 * m + 3
    assert target.n == expected_n and target.is_tree()
    meta = {"n_vars": n_vars, "n_clauses": m, "M": M, "clauses": [list(c) for c in clauses],
            "ids": ids}
    formula = "n(M+2) + 2k + 3(m-k) + 1"
    return ReductionInstance("max2sat-to-tree", target, "mcs", meta, formula)


def forward_witness(inst: ReductionInstance, assignment) -> tuple[int, ...]:
    """Consistent subset built from a truth assignment (``assignment[i]`` is variable ``i + 1``)."""
    ids = inst.meta["ids"]
    M = inst.meta["M"]
    out = set()
    for i in range(1, inst.meta["n_vars"] + 1):
        if assignment[i - 1]:
            out.update(ids[f"s{i}^{j}"] for j in range(1, M + 1))
            out.update((ids[f"x{i}^2"], ids[f"xbar{i}^4"]))
        else:
            out.update(ids[f"sbar{i}^{j}"] for j in range(1, M + 1))
            out.update((ids[f"x{i}^4"], ids[f"xbar{i}^2"]))
    for i, (y, z) in enumerate(inst.meta["clauses"], 1):
        if literal_true(y, assignment):
            out.update((ids[f"w{i}^7"], ids[f"z{i}^1"]))
        elif literal_true(z, assignment):
            out.update((ids[f"w{i}^1"], ids[f"y{i}^1"]))
        else:
            out.update((ids[f"w{i}^1"], ids[f"y{i}^1"], ids[f"z{i}^7"]))
    out.add(ids["v3"])
    return tuple(sorted(out))


def check_max2sat_structure(inst: ReductionInstance) -> list[str]:
    """Structural checks on a MAX-2SAT tree; returns the failures (empty when sound)."""
    g, meta = inst.target, inst.meta
    n, m, M, ids = meta["n_vars"], meta["n_clauses"], meta["M"], meta["ids"]
    problems = []
    if g.n != n * (8 + 2 * M) + 21 * m + 3:
        problems.append(f"vertex count {g.n}")
    if not g.is_tree():
        problems.append("not a tree")
    counts = Counter(g.colors)
    for i in range(1, n + 1):
        for j in range(1, M + 1):
            if counts[g.colors[ids[f"s{i}^{j}"]]] != 2:
                problems.append(f"stabilizer color ({i},{j}) not used exactly twice")
    for i in range(1, m + 1):
        if counts[g.colors[ids[f"w{i}^1"]]] != 7:
            problems.append(f"clause color {i} not used 7 times")
    if counts[g.colors[ids["v1"]]] != 3:
        problems.append("central color not used 3 times")
    d = DistanceOracle(g)
    for i in range(1, m + 1):
        if d.d(ids[f"y{i}^1"], ids[f"w{i}^7"]) != 6:
            problems.append(f"d(y{i}^1, w{i}^7) != 6")
        if d.d(ids["v1"], ids[f"w{i}^4"]) != 1:
            problems.append(f"d(v1, w{i}^4) != 1")
    return problems


def check_forward_witness(inst: ReductionInstance, assignment) -> tuple[bool, int, int]:
    """``(is consistent, size, expected size)`` for the witness of ``assignment``."""
    wit = forward_witness(inst, assignment)
    k = count_satisfied([tuple(c) for c in inst.meta["clauses"]], assignment)
    expected = max2sat_target_size(inst.meta["n_vars"], inst.meta["n_clauses"], inst.meta["M"], k)
    return verify_cs(inst.target, wit).holds, len(wit), expected


def certify_reduction(inst: ReductionInstance, source_opt: int, cap: int = DEFAULT_CAP) -> bool:
    """Does the exhaustive optimum of the target match the expected size?"""
    oracle = brute_mcs if inst.problem == "mcs" else brute_mscs
    return oracle(inst.target, cap=cap).size == inst.expected_size(source_opt)
