"""Vertex-colored graphs: representation, instance I/O, distances, blocks and
graph-class recognition.

Every solver in the package consumes a :class:`ColoredGraph`. Graphs are
undirected, simple, connected, and carry positive integer edge weights
(weight 1 everywhere when unweighted).
"""
from __future__ import annotations

import heapq
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class InstanceError(ValueError):
    """Base class for problems with an instance file or graph."""


class ParseError(InstanceError):
    pass


class ValidationError(InstanceError):
    pass


@dataclass(frozen=True)
class SolveResult:
    witness: tuple[int, ...]
    problem: str
    algorithm: str

    @property
    def size(self) -> int:
        return len(self.witness)

    def as_dict(self) -> dict:
        return {
            "problem": self.problem,
            "algorithm": self.algorithm,
            "size": self.size,
            "witness": list(self.witness),
        }


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    n: int
    colors: tuple[int, ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    weighted: bool = False

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], colors: Sequence[int],
                   weighted: bool | None = None) -> "ColoredGraph":
        """Build and validate a graph from ``(u, v)`` or ``(u, v, w)`` edges."""
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValidationError(f"vertex count must be a non-negative integer, got {n!r}")
        colors = tuple(colors)
        if len(colors) != n:
            raise ValidationError(f"expected {n} colors, got {len(colors)}")
        for v, c in enumerate(colors):
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValidationError(f"color index out of range at vertex {v}: {c!r}")

        explicit = False
        seen: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1
            elif len(e) == 3:
                u, v, w = e
                explicit = True
            else:
                raise ValidationError(f"edge must be [u, v] or [u, v, w], got {list(e)!r}")
            for x in (u, v, w):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValidationError(f"edge entries must be integers, got {list(e)!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge endpoint out of range: {list(e)!r}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if w <= 0:
                raise ValidationError(f"non-positive weight {w} on edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"parallel edge ({key[0]}, {key[1]})")
            seen[key] = w

        if weighted is None:
            weighted = explicit
        if not weighted and any(w != 1 for w in seen.values()):
            raise ValidationError("edge weights other than 1 on an unweighted graph")

        lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), w in sorted(seen.items()):
            lists[u].append((v, w))
            lists[v].append((u, w))
        g = cls(n, colors, tuple(tuple(sorted(a)) for a in lists), bool(weighted))
        if not g.is_connected():
            raise ValidationError("graph is disconnected")
        return g

    # -- basic queries -------------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        return [u for u, _ in self.adj[v]]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for u in range(self.n) for v, w in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u, _ in self.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    stack.append(u)
        return count == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1

    def color_set(self, vertices: Iterable[int]) -> set[int]:
        return {self.colors[v] for v in vertices}

    def relabel(self, perm: Sequence[int]) -> "ColoredGraph":
        """Return the isomorphic graph where vertex ``v`` becomes ``perm[v]``."""
        colors = [0] * self.n
        for v in range(self.n):
            colors[perm[v]] = self.colors[v]
        edges = [(perm[u], perm[v], w) if self.weighted else (perm[u], perm[v])
                 for u, v, w in self.edges()]
        return ColoredGraph.from_edges(self.n, edges, colors, weighted=self.weighted)

    # -- serialization -------------------------------------------------------

    def to_document(self) -> dict:
        if self.weighted:
            edges = [[u, v, w] for u, v, w in self.edges()]
        else:
            edges = [[u, v] for u, v, _ in self.edges()]
        return {"n": self.n, "colors": list(self.colors), "edges": edges,
                "weighted": self.weighted}

    def dumps(self) -> str:
        """Canonical text form: edges sorted lexicographically, stable key order."""
        doc = self.to_document()
        parts = [
            f'"n": {doc["n"]}',
            f'"colors": {json.dumps(doc["colors"])}',
            '"edges": [' + ", ".join(json.dumps(e) for e in doc["edges"]) + "]",
            f'"weighted": {json.dumps(doc["weighted"])}',
        ]
        return "{" + ", ".join(parts) + "}\n"


def load_graph(data: bytes | str) -> ColoredGraph:
    """Parse and validate an instance document."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"instance is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed instance: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    for key in ("n", "colors", "edges"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if not isinstance(doc["colors"], list) or not isinstance(doc["edges"], list):
        raise ParseError("'colors' and 'edges' must be arrays")
    weighted = doc.get("weighted")
    if weighted is not None and not isinstance(weighted, bool):
        raise ParseError("'weighted' must be a boolean")
    for e in doc["edges"]:
        if not isinstance(e, list):
            raise ParseError(f"edge must be an array, got {e!r}")
    return ColoredGraph.from_edges(doc["n"], doc["edges"], doc["colors"], weighted=weighted)


def read_graph(path) -> ColoredGraph:
    with open(path, "rb") as fh:
        return load_graph(fh.read())


# -- distances ---------------------------------------------------------------

def _sssp(g: ColoredGraph, s: int) -> tuple[list[int], list[int]]:
    n = g.n
    dist = [-1] * n
    parent = [-1] * n
    dist[s] = 0
    if not g.weighted:
        queue = deque([s])
        while queue:
            v = queue.popleft()
            dv = dist[v] + 1
            for u, _ in g.adj[v]:
                if dist[u] < 0:
                    dist[u] = dv
                    parent[u] = v
                    queue.append(u)
        return dist, parent
    done = [False] * n
    heap = [(0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for u, w in g.adj[v]:
            nd = d + w
            if dist[u] < 0 or nd < dist[u]:
                dist[u] = nd
                parent[u] = v
                heapq.heappush(heap, (nd, u))
    return dist, parent


def distances_from(g: ColoredGraph, s: int) -> list[int]:
    """Single-source shortest path distances (hop counts when unweighted)."""
    if not 0 <= s < g.n:
        raise IndexError(f"source {s} out of range")
    return _sssp(g, s)[0]


class DistanceOracle:
    """Lazily cached single-source rows with parent links."""

    def __init__(self, g: ColoredGraph):
        self.g = g
        self._rows: dict[int, tuple[list[int], list[int]]] = {}

    def _get(self, s: int):
        r = self._rows.get(s)
        if r is None:
            r = self._rows[s] = _sssp(self.g, s)
        return r

    def row(self, s: int) -> list[int]:
        return self._get(s)[0]

    def d(self, u: int, v: int) -> int:
        return self._get(u)[0][v]

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of one shortest u-v path, ``u`` first."""
        parent = self._get(v)[1]
        out = [u]
        while out[-1] != v:
            out.append(parent[out[-1]])
        return out

    def matrix(self) -> np.ndarray:
        return np.array([self.row(s) for s in range(self.g.n)], dtype=np.int64).reshape(self.g.n, self.g.n)


def nearest_in_set(g: ColoredGraph, d: DistanceOracle, v: int, S: Iterable[int]) -> frozenset[int]:
    """All members of ``S`` at minimum distance from ``v`` (ties kept)."""
    S = list(S)
    if not S:
        raise ValueError("nearest_in_set needs a non-empty set")
    row = d.row(v)
    best = min(row[s] for s in S)
    return frozenset(s for s in S if row[s] == best)


# -- blocks ------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    block_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    color: tuple[int, ...]
    adjacency: tuple[frozenset[int], ...]
    links: dict[tuple[int, int], tuple[tuple[int, int], ...]] = field(compare=False)

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def leaf(self) -> tuple[bool, ...]:
        return tuple(len(a) <= 1 for a in self.adjacency)

    def tree_edges(self) -> list[tuple[int, int]]:
        return sorted(self.links)


def blocks(g: ColoredGraph) -> BlockDecomposition:
    """Maximal monochromatic connected pieces, numbered by smallest member."""
    block_of = [-1] * g.n
    members: list[tuple[int, ...]] = []
    for s in range(g.n):
        if block_of[s] >= 0:
            continue
        b = len(members)
        c = g.colors[s]
        block_of[s] = b
        stack, comp = [s], [s]
        while stack:
            v = stack.pop()
            for u, _ in g.adj[v]:
                if block_of[u] < 0 and g.colors[u] == c:
                    block_of[u] = b
                    stack.append(u)
                    comp.append(u)
        members.append(tuple(sorted(comp)))
    adjacency = [set() for _ in members]
    links: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v, _ in g.edges():
        a, b = block_of[u], block_of[v]
        if a != b:
            adjacency[a].add(b)
            adjacency[b].add(a)
            key, pair = ((a, b), (u, v)) if a < b else ((b, a), (v, u))
            links.setdefault(key, []).append(pair)
    return BlockDecomposition(
        tuple(block_of), tuple(members), tuple(g.colors[m[0]] for m in members),
        tuple(frozenset(a) for a in adjacency),
        {k: tuple(v) for k, v in sorted(links.items())},
    )


# -- graph classes -----------------------------------------------------------

CLASS_ORDER = ("path", "cycle", "spider", "comb", "tree", "general")


@dataclass(frozen=True)
class GraphClass:
    kind: str
    order: tuple[int, ...] = ()          # vertex sequence for paths and cycles
    center: int | None = None            # spiders
    skeleton: tuple[int, ...] = ()       # combs
    teeth: tuple[tuple[int, ...], ...] = ()  # combs: tooth below each skeleton vertex, top first

    @property
    def tooth_leaves(self) -> tuple[int, ...]:
        return tuple(t[-1] if t else s for s, t in zip(self.skeleton, self.teeth))


def _walk(g: ColoredGraph, start: int, prev: int) -> list[int]:
    """Follow degree-2 vertices from ``start`` away from ``prev``."""
    out = [start]
    while True:
        v = out[-1]
        nxt = [u for u, _ in g.adj[v] if u != prev]
        if g.degree(v) != 2 or not nxt:
            return out
        prev = v
        out.append(nxt[0])


def path_order(g: ColoredGraph) -> tuple[int, ...] | None:
    if g.n == 1:
        return (0,)
    if not g.is_tree():
        return None
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < g.n:
        v = order[-1]
        for u, _ in g.adj[v]:
            if u != prev:
                prev = v
                order.append(u)
                break
    return tuple(order)


def cycle_order(g: ColoredGraph) -> tuple[int, ...] | None:
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)):
        return None
    a, b = sorted(g.neighbors(0))
    order = [0, a]
    while len(order) < g.n:
        v, prev = order[-1], order[-2]
        order.append(next(u for u, _ in g.adj[v] if u != prev))
    return tuple(order)


def spider_center(g: ColoredGraph) -> int | None:
    if not g.is_tree():
        return None
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    return big[0] if len(big) == 1 else None


def comb_structure(g: ColoredGraph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]] | None:
    """Skeleton and teeth of a comb, or None.

    The skeleton runs between two leaves and contains every vertex of degree
    3; off-skeleton parts are paths hanging from distinct skeleton vertices.
    At each end of the forced core the longer branch extends the skeleton
    (smaller leaf id on ties).
    """
    if not g.is_tree():
        return None
    if g.n <= 2:
        return tuple(path_order(g)), tuple(() for _ in range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    if max(deg) > 3:
        return None
    big = [v for v in range(g.n) if deg[v] == 3]
    if not big:
        order = path_order(g)
        return order, tuple(() for _ in order)

    # minimal subtree spanning the degree-3 vertices; must be a path
    alive = [True] * g.n
    rem = deg[:]
    is_big = [d == 3 for d in deg]
    queue = deque(v for v in range(g.n) if rem[v] == 1 and not is_big[v])
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for u, _ in g.adj[v]:
            if alive[u]:
                rem[u] -= 1
                if rem[u] == 1 and not is_big[u]:
                    queue.append(u)
    core_vs = [v for v in range(g.n) if alive[v]]
    core_adj = {v: [u for u, _ in g.adj[v] if alive[u]] for v in core_vs}
    if any(len(a) > 2 for a in core_adj.values()):
        return None
    if len(core_vs) == 1:
        core = core_vs
    else:
        start = min(v for v in core_vs if len(core_adj[v]) == 1)
        core = [start]
        prev = -1
        while True:
            nxt = [u for u in core_adj[core[-1]] if u != prev]
            if not nxt:
                break
            prev = core[-1]
            core.append(nxt[0])
    on_core = set(core)

    def branches(v):
        out = [_walk(g, u, v) for u, _ in g.adj[v] if u not in on_core]
        return sorted(out, key=lambda br: (-len(br), br[-1]))

    left = branches(core[0])
    if len(core) == 1:
        right = left[1:]
        left = left[:1]
    else:
        right = branches(core[-1])
    skeleton = list(reversed(left[0])) + core + right[0]
    if skeleton[-1] < skeleton[0]:
        skeleton.reverse()
    on_skel = set(skeleton)
    teeth = []
    for s in skeleton:
        off = [u for u, _ in g.adj[s] if u not in on_skel]
        if len(off) > 1:
            return None
        teeth.append(tuple(_walk(g, off[0], s)) if off else ())
    return tuple(skeleton), tuple(teeth)


def recognize(g: ColoredGraph, kind: str) -> GraphClass | None:
    """GraphClass witness if ``g`` belongs to ``kind`` (classes nest), else None."""
    if kind == "path":
        order = path_order(g)
        return GraphClass("path", order=order) if order else None
    if kind == "cycle":
        order = cycle_order(g)
        return GraphClass("cycle", order=order) if order else None
    if kind == "spider":
        c = spider_center(g)
        return GraphClass("spider", center=c) if c is not None else None
    if kind == "comb":
        cs = comb_structure(g)
        return GraphClass("comb", skeleton=cs[0], teeth=cs[1]) if cs else None
    if kind == "tree":
        return GraphClass("tree") if g.is_tree() else None
    if kind == "general":
        return GraphClass("general")
    raise ValueError(f"unknown graph class {kind!r}")


def classify(g: ColoredGraph) -> GraphClass:
    """Most specific class in the order path, cycle, spider, comb, tree, general."""
    for kind in CLASS_ORDER:
        cls = recognize(g, kind)
        if cls is not None:
            return cls
    raise AssertionError("unreachable")
