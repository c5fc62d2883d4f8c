"""Seeded random instances of each graph class."""
from __future__ import annotations

import random

from .graph import ColoredGraph

SHAPES = ("path", "cycle", "spider", "comb", "tree", "general")


def _tree_edges(shape: str, n: int, rng: random.Random, legs: int | None, teeth: int | None):
    if shape == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if shape == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    if shape == "spider":
        if n < 4:
            raise ValueError("a spider needs at least 4 vertices")
        k = legs if legs is not None else rng.randint(3, min(n - 1, 6))
        if not 3 <= k <= n - 1:
            raise ValueError(f"a spider on {n} vertices needs 3..{n - 1} legs, got {k}")
        edges = [(0, v) for v in range(1, k + 1)]
        ends = list(range(1, k + 1))
        for v in range(k + 1, n):
            i = rng.randrange(k)
            edges.append((ends[i], v))
            ends[i] = v
        return edges
    if shape == "comb":
        if n < 6:
            raise ValueError("a comb needs at least 6 vertices")
        # at least two interior skeleton vertices carry teeth, so it is not a spider
        max_teeth = (n - 2) // 2
        t = teeth if teeth is not None else rng.randint(2, max_teeth)
        if not 2 <= t <= max_teeth:
            raise ValueError(f"a comb on {n} vertices takes 2..{max_teeth} teeth, got {t}")
        k = rng.randint(t + 2, n - t)
        edges = [(i, i + 1) for i in range(k - 1)]
        anchors = sorted(rng.sample(range(1, k - 1), t))
        tips = {a: a for a in anchors}
        for v in range(k, n):
            a = anchors[v - k] if v - k < t else rng.choice(anchors)
            edges.append((tips[a], v))
            tips[a] = v
        return edges
    if shape in ("tree", "general"):
        return [(rng.randrange(v), v) for v in range(1, n)]
    raise ValueError(f"unknown shape {shape!r}")


def generate(shape: str, n: int, colors: int = 2, seed: int = 0, *, legs: int | None = None,
             teeth: int | None = None, max_weight: int = 1, extra_edges: int | None = None) -> ColoredGraph:
    """Connected colored instance of the requested shape; same arguments give the same graph."""
    if n < 1:
        raise ValueError("n must be positive")
    if colors < 1:
        raise ValueError("need at least one color")
    if max_weight < 1:
        raise ValueError("max_weight must be positive")
    rng = random.Random(seed)
    edges = _tree_edges(shape, n, rng, legs, teeth)
    if shape == "general" and n >= 3:
        present = {(min(u, v), max(u, v)) for u, v in edges}
        extra = extra_edges if extra_edges is not None else rng.randint(1, n)
        for _ in range(extra):
            u, v = rng.sample(range(n), 2)
            key = (min(u, v), max(u, v))
            if key not in present:
                present.add(key)
                edges.append(key)
    perm = list(range(n))
    rng.shuffle(perm)
    palette = [rng.randrange(colors) for _ in range(n)]
    weighted = max_weight > 1
    out = []
    for u, v in edges:
        e = (perm[u], perm[v])
        out.append(e + (rng.randint(1, max_weight),) if weighted else e)
    return ColoredGraph.from_edges(n, out, palette, weighted=weighted)
