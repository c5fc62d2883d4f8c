import sys
import random

import pytest
from hypothesis import strategies as st

from mscs.graph import ColoredGraph


def path_graph(colors):
    n = len(colors)
    return ColoredGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], colors)


def cycle_graph(colors):
    n = len(colors)
    return ColoredGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], colors)


def star_graph(center_color, leaf_colors):
    n = len(leaf_colors) + 1
    return ColoredGraph.from_edges(n, [(0, v) for v in range(1, n)], [center_color, *leaf_colors])


def random_tree(rng: random.Random, n: int, colors: int, shape: str = "uniform", max_weight: int = 1):
    """Random labelled tree; ``shape`` controls how parents are drawn."""
    edges = []
    for v in range(1, n):
        if shape == "caterpillar":
            u = max(0, v - 1 - rng.randint(0, 1))
        elif shape == "deep":
            u = rng.randrange(max(0, v - 2), v)
        elif shape == "bushy":
            u = rng.randrange(min(v, 3))
        else:
            u = rng.randrange(v)
        edges.append((u, v, rng.randint(1, max_weight)) if max_weight > 1 else (u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    relabeled = [(perm[e[0]], perm[e[1]], *e[2:]) for e in edges]
    return ColoredGraph.from_edges(n, relabeled, [rng.randrange(colors) for _ in range(n)],
                                   weighted=max_weight > 1)


@st.composite
def trees(draw, max_n=10, max_colors=3, max_weight=1):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    colors = draw(st.lists(st.integers(0, max_colors - 1), min_size=n, max_size=n))
    if max_weight > 1:
        ws = draw(st.lists(st.integers(1, max_weight), min_size=n - 1, max_size=n - 1))
        edges = [(p, v, w) for v, (p, w) in enumerate(zip(parents, ws), 1)]
    else:
        edges = [(p, v) for v, p in enumerate(parents, 1)]
    return ColoredGraph.from_edges(n, edges, colors, weighted=max_weight > 1)


@st.composite
def connected_graphs(draw, max_n=7, max_colors=3):
    g = draw(trees(max_n=max_n, max_colors=max_colors))
    extra = draw(st.lists(st.tuples(st.integers(0, g.n - 1), st.integers(0, g.n - 1)), max_size=g.n))
    edges = {(u, v) for u, v, _ in g.edges()}
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return ColoredGraph.from_edges(g.n, sorted(edges), g.colors)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
