"""Exact minimum strict consistent subset on (weighted) trees.

The engine works on hanging subtrees. For a tree edge ``(u, y)`` let ``T_y``
be the component of ``y`` once the edge is removed. Everything outside
``T_y`` is summarised by one number: the distance ``D`` from ``u`` to its
nearest chosen vertex, whose color is unanimously ``C(u)``. The value
``G(u, y, D)`` is the fewest chosen vertices inside ``T_y`` that make every
vertex of ``T_y`` strictly consistent without disturbing anything outside.

If ``T_y`` is entirely colored ``C(u)`` nothing is needed. Otherwise let
``z`` be the chosen vertex of ``T_y`` nearest to ``u``. Every vertex ``p``
on the path ``y..z`` is then covered by the outside (distance
``D + d(u, p)``) or by ``z``, and each subtree hanging off that path is an
independent instance of the same problem. A forced vertex ``x`` with a
neighbor ``y`` (subproblem ``T(x, y)``) is ``1 + G(u, y, d(u, x))`` where
``u`` is the neighbor of ``y`` toward ``x``.
"""
from __future__ import annotations

import enum
import sys
import threading
from typing import Callable, Iterator

from .graph import ColoredGraph, DistanceOracle, SolveResult, blocks


class Infinity(enum.Enum):
    """Cost of an infeasible subproblem."""

    INF = "inf"

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"


INF = Infinity.INF


def run_deep(fn: Callable, depth: int):
    """Run ``fn`` with room for ``depth`` nested recursive calls."""
    if depth < 300:
        return fn()
    out: dict = {}

    def target():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 8 * depth + 1000))
        try:
            out["value"] = fn()
        except BaseException as exc:  # re-raised in the caller's thread
            out["error"] = exc
        finally:
            sys.setrecursionlimit(old)

    old_size = threading.stack_size()
    threading.stack_size(min(1 << 30, max(64 << 20, depth * 4096)))
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_size)
    if "error" in out:
        raise out["error"]
    return out["value"]


class TreeSolver:
    """Memoised dynamic program over hanging subtrees of one tree."""

    algorithm = "tree-dp"

    def __init__(self, g: ColoredGraph):
        if not g.is_tree():
            raise ValueError("instance is not a tree")
        self.g = g
        self.n = g.n
        self.colors = g.colors
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.oracle = DistanceOracle(g)
        self.memo: dict[tuple[int, int, int], tuple[int | Infinity, int | None]] = {}
        self._bad = self._bichromatic_counts()

    # -- precomputation ------------------------------------------------------

    def dist(self, a: int, b: int) -> int:
        return self.oracle.d(a, b)

    def _bichromatic_counts(self):
        """Bichromatic edge counts below each vertex when rooted at 0."""
        n, col = self.n, self.colors
        parent = [-1] * n
        order = [0]
        seen = [False] * n
        seen[0] = True
        for v in order:
            for w in self.nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    order.append(w)
        below = [0] * n
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                below[p] += below[v] + (col[v] != col[p])
        self._parent = parent
        return below

    def monochromatic(self, u: int, y: int) -> bool:
        """Is the subtree hanging from ``u`` through ``y`` a single color?"""
        below, parent = self._bad, self._parent
        if parent[y] == u:
            return below[y] == 0
        return below[0] - below[u] - (self.colors[u] != self.colors[y]) == 0

    # -- candidate enumeration ----------------------------------------------

    def _candidates(self, u: int, y: int, D: int) -> Iterator[tuple[int, int, list[int]]]:
        """Valid nearest vertices ``z`` of ``T_y`` as ``(z, d(u, z), path y..z)``.

        The yielded path list is reused between iterations.
        """
        col, nbrs = self.colors, self.nbrs
        du = self.oracle.row(u)
        c = col[u]
        path: list[int] = []
        # (vertex, predecessor, depth, d(u, last c-colored), d(u, first other), other color)
        stack = [(y, u, 0, 0, 0, -1)]
        while stack:
            v, pred, k, q, p1, other = stack.pop()
            del path[k:]
            path.append(v)
            L = du[v]
            cv = col[v]
            if cv == c:
                if other >= 0:
                    continue  # color returns to c after leaving it
                q = L
                valid = L >= D
            else:
                if other < 0:
                    other, p1 = cv, L
                elif cv != other:
                    continue  # a third color run
                elif L >= D + 2 * p1:
                    continue  # first off-color vertex would be nearer the outside
                valid = D + 2 * q < L < D + 2 * p1
            if valid:
                yield v, L, path
            for w in nbrs[v]:
                if w != pred:
                    stack.append((w, v, k + 1, q, p1, other))

    def _path_cost(self, u, y, D, z, L, path, bound, rep):
        """``1 + sum`` of hanging-subtree costs along ``path``; None if above ``bound``."""
        du = self.oracle.row(u)
        nbrs = self.nbrs
        total = 1
        last = len(path) - 1
        for i, p in enumerate(path):
            pred = path[i - 1] if i else u
            succ = path[i + 1] if i < last else -1
            dp = du[p]
            dx, dz = D + dp, L - dp
            for w in nbrs[p]:
                if w == pred or w == succ:
                    continue
                s = self._G(p, w, dx, rep) if dx <= dz else self._G(p, w, dz, z)
                if s is INF:
                    return INF
                total += s
                if total > bound:
                    return None
        return total

    def _cost(self, u, y, D, z, L, path, bound, rep):
        return self._path_cost(u, y, D, z, L, path, bound, rep)

    # -- the recurrence ------------------------------------------------------

    def _G(self, u: int, y: int, D: int, rep: int | None = None):
        """Fewest chosen vertices in ``T_y`` given outside distance ``D`` at ``u``.

        ``rep`` is any vertex outside ``T_y`` at distance ``D`` from ``u``; only
        table-driven subclasses use it.
        """
        key = (u, y, D)
        hit = self.memo.get(key)
        if hit is not None:
            return hit[0]
        if self.colors[y] == self.colors[u] and self.monochromatic(u, y):
            self.memo[key] = (0, None)
            return 0
        best: int | Infinity = INF
        best_key = None
        best_z = None
        for z, L, path in self._candidates(u, y, D):
            bound = best if best is not INF else float("inf")
            cost = self._cost(u, y, D, z, L, path, bound, rep)
            if cost is None or cost is INF:
                continue
            k = (cost, L, z)
            if best_key is None or k < best_key:
                best, best_key, best_z = cost, k, z
        self.memo[key] = (best, best_z)
        return best

    def _children(self, u: int, y: int, D: int, z: int):
        """Hanging subproblems ``(p, w, D')`` below the choice ``z`` for key ``(u, y, D)``."""
        du = self.oracle.row(u)
        L = du[z]
        path = self.oracle.path(y, z)
        out = []
        for i, p in enumerate(path):
            pred = path[i - 1] if i else u
            succ = path[i + 1] if i + 1 < len(path) else -1
            dp = min(D + du[p], L - du[p])
            out.extend((p, w, dp) for w in self.nbrs[p] if w != pred and w != succ)
        return out

    def _collect(self, roots, out: set[int]) -> None:
        stack = list(roots)
        while stack:
            key = stack.pop()
            cost, z = self.memo[key]
            if z is None:
                continue
            out.add(z)
            stack.extend(self._children(*key, z))

    # -- public subproblem interface ----------------------------------------

    def _anchor(self, x: int, y: int):
        """``(u, D)`` for subproblem ``T(x, y)``, or None if ``x`` cannot cover ``path(x, u)``."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise IndexError("vertex out of range")
        p = self.oracle.path(y, x)
        u = p[1]
        if any(self.colors[v] != self.colors[x] for v in p[1:]):
            return None
        return u, self.dist(u, x)

    def solve_subproblem(self, x: int, y: int) -> tuple[int | Infinity, tuple[int, ...]]:
        """Best solution of ``T(x, y)`` containing ``x``; ``x == y`` means the whole tree."""
        return run_deep(lambda: self._solve_subproblem(x, y), self.n)

    def _solve_subproblem(self, x, y):
        if x == y:
            keys = [(x, w, 0) for w in self.nbrs[x]]
            total = 1
            for k in keys:
                s = self._G(*k, x)
                if s is INF:
                    return INF, ()
                total += s
        else:
            anchor = self._anchor(x, y)
            if anchor is None:
                return INF, ()
            u, D = anchor
            keys = [(u, y, D)]
            s = self._G(u, y, D, x)
            if s is INF:
                return INF, ()
            total = 1 + s
        out = {x}
        self._collect(keys, out)
        return total, tuple(sorted(out))

    def valid_pairs(self, x: int, y: int) -> list[int]:
        """Vertices ``z`` of ``T_y`` that may be the chosen vertex nearest to ``x``."""
        anchor = self._anchor(x, y) if x != y else None
        if anchor is None:
            return []
        u, D = anchor
        return sorted(z for z, _, _ in self._candidates(u, y, D))

    def solve_constrained(self, x: int, y: int, z: int) -> tuple[int | Infinity, tuple[int, ...]]:
        """Best solution of ``T(x, y)`` in which ``z`` is the chosen vertex of ``T_y`` nearest to ``x``."""
        return run_deep(lambda: self._solve_constrained(x, y, z), self.n)

    def _solve_constrained(self, x, y, z):
        anchor = self._anchor(x, y) if x != y else None
        if anchor is None:
            return INF, ()
        u, D = anchor
        for cand, L, path in self._candidates(u, y, D):
            if cand == z:
                cost = self._cost(u, y, D, z, L, path, float("inf"), x)
                if cost is INF:
                    return INF, ()
                out = {x, z}
                self._collect(self._children(u, y, D, z), out)
                return 1 + cost, tuple(sorted(out))
        return INF, ()

    # -- whole-tree solve ----------------------------------------------------

    def leaf_anchor(self):
        """Smallest leaf block and its single boundary edge ``(u, y)``, ``u`` inside it."""
        bd = blocks(self.g)
        leaf = min((b for b in range(bd.count) if bd.leaf[b]),
                   key=lambda b: (len(bd.members[b]), b))
        (other,) = bd.adjacency[leaf]
        links = bd.links[(min(leaf, other), max(leaf, other))]
        assert len(links) == 1, "blocks of a tree meet along a single edge"
        a, b = links[0]
        u, y = (a, b) if bd.block_of[a] == leaf else (b, a)
        return bd.members[leaf], u, y

    def solve(self) -> tuple[int, ...]:
        if len(set(self.colors)) <= 1:
            return (0,)
        return run_deep(self._solve, self.n)

    def _solve(self):
        members, u, y = self.leaf_anchor()
        best = None
        for x in members:
            D = self.dist(u, x)
            s = self._G(u, y, D, x)
            if s is INF:
                continue
            if best is None or s < best[0]:
                best = (s, x, D)
        assert best is not None, "some vertex of a leaf block is always feasible"
        _, x, D = best
        out = {x}
        self._collect([(u, y, D)], out)
        return tuple(sorted(out))


def solve_mscs_tree(g: ColoredGraph) -> SolveResult:
    """Minimum strict consistent subset of a tree."""
    if not g.is_tree():
        raise ValueError("instance is not a tree")
    return SolveResult(TreeSolver(g).solve(), "mscs", "tree-dp")


def solve_mscs_tree_weighted(g: ColoredGraph) -> SolveResult:
    """Same dynamic program under weighted distances."""
    if not g.is_tree():
        raise ValueError("instance is not a tree")
    return SolveResult(TreeSolver(g).solve(), "mscs", "tree-dp-weighted")
