"""Specialised exact solvers for paths, cycles, spiders and combs.

Paths use an overlay digraph with one dummy vertex per block: a type-1 arc
joins a vertex to its unique partner in the next block, and type-2 arcs join
every vertex to its block's dummy. Passing through an interior dummy means
the block holds two chosen vertices. Cycles, spider legs and comb teeth are
reduced to constrained path instances.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph, SolveResult, recognize
from .tree_dp import INF, Infinity, TreeSolver, run_deep

_BIG = float("inf")


@dataclass(frozen=True)
class OverlayGraph:
    """Overlay digraph of a colored path given by its color sequence."""

    n: int
    block_of: tuple[int, ...]
    starts: tuple[int, ...]           # first position of each block
    type1: dict                        # position -> partner position in the next block
    type2: tuple[tuple[int, int, int], ...]  # (position, block, weight), one per real vertex

    @classmethod
    def from_colors(cls, colors) -> "OverlayGraph":
        n = len(colors)
        starts = [0] + [i for i in range(1, n) if colors[i] != colors[i - 1]]
        block_of = []
        for j, s in enumerate(starts):
            e = starts[j + 1] if j + 1 < len(starts) else n
            block_of.extend([j] * (e - s))
        k = len(starts)
        type1 = {}
        for i in range(n):
            part = _mirror(starts, block_of, n, i)
            if part is not None:
                type1[i] = part
        type2 = tuple((i, block_of[i], 0 if block_of[i] in (0, k - 1) else 1) for i in range(n))
        return cls(n, tuple(block_of), tuple(starts), type1, type2)

    @property
    def blocks(self) -> int:
        return len(self.starts)

    def block_range(self, j: int) -> range:
        end = self.starts[j + 1] if j + 1 < self.blocks else self.n
        return range(self.starts[j], end)

    @property
    def arc_count(self) -> int:
        # each type-2 edge is usable in both directions
        return len(self.type1) + 2 * len(self.type2)

    def shortest_forward_path(self, force_first: bool = False, force_last: bool = False,
                              lane_min: int = 0) -> tuple[int | Infinity, tuple[int, ...]]:
        """Fewest real vertices on a forward s-t path, and those vertices.

        With ``force_first`` the path must start at position 0 and may revisit
        the first dummy, provided the second vertex sits at position
        ``>= lane_min``. With ``force_last`` it must end at the last position.
        """
        n, k = self.n, self.blocks
        if n == 0:
            return INF, ()
        entry = [_BIG] * n          # cost when the position is its block's first chosen vertex
        exit_ = [_BIG] * n          # cost when the position is its block's last chosen vertex
        via = [-1] * n              # for exits: the entry of a two-vertex block, else -1
        came = [-1] * n             # for entries: the previous block's exit
        if force_first:
            entry[0] = 1
        else:
            for i in self.block_range(0):
                entry[i] = 1
        for j in range(k):
            rng = self.block_range(j)
            if j:
                for i in self.block_range(j - 1):
                    if exit_[i] < _BIG and i in self.type1:
                        p = self.type1[i]
                        if exit_[i] + 1 < entry[p]:
                            entry[p] = exit_[i] + 1
                            came[p] = i
            lane = 0 < j < k - 1 or (j == 0 and force_first) or (j == k - 1 and force_last)
            floor = lane_min if j == 0 else 0
            best, arg = _BIG, -1    # cheapest entry strictly left of the current position
            for m in rng:
                exit_[m] = entry[m]
                if lane and m >= floor and best + 1 < exit_[m]:
                    exit_[m] = best + 1
                    via[m] = arg
                if entry[m] < best:
                    best, arg = entry[m], m
        last = self.block_range(k - 1)
        if force_last:
            end = last[-1]
            cost = exit_[end]
        else:
            end = min(last, key=lambda m: (entry[m], m))
            cost = entry[end]
            via[end] = -1
        if cost >= _BIG:
            return INF, ()
        chosen = []
        m = end
        while m >= 0:
            chosen.append(m)
            e = via[m] if via[m] >= 0 else m
            if e != m:
                chosen.append(e)
            m = came[e]
        return int(cost), tuple(sorted(chosen))


def _mirror(starts, block_of, n, i):
    j = block_of[i]
    if j + 1 >= len(starts):
        return None
    a = starts[j + 1] - 1
    k = 2 * a + 1 - i
    if k < n and block_of[k] == j + 1:
        return k
    return None


def path_valid_pair(colors, i: int) -> int | None:
    """Partner of position ``i`` in the next block of a colored path (0-indexed).

    With ``a`` the last position of ``i``'s block the partner is
    ``2a + 1 - i``, if that position lies in the next block.
    """
    starts = [0] + [p for p in range(1, len(colors)) if colors[p] != colors[p - 1]]
    block_of = []
    for j, s in enumerate(starts):
        e = starts[j + 1] if j + 1 < len(starts) else len(colors)
        block_of.extend([j] * (e - s))
    return _mirror(starts, block_of, len(colors), i)


def segment_mscs(colors, force_first=False, force_last=False, lane_min=0):
    """Constrained MSCS of a colored path by positions: ``(cost, positions)``."""
    return OverlayGraph.from_colors(colors).shortest_forward_path(force_first, force_last, lane_min)


def _need(g: ColoredGraph, kind: str):
    cls = recognize(g, kind)
    if cls is None:
        raise ValueError(f"instance is not a {kind}")
    if g.weighted and any(w != 1 for _, _, w in g.edges()):
        raise ValueError(f"the {kind} solver handles unweighted instances only")
    return cls


# -- paths and cycles ----------------------------------------------------------

def solve_mscs_path(g: ColoredGraph) -> SolveResult:
    order = _need(g, "path").order
    cost, pos = segment_mscs([g.colors[v] for v in order])
    return SolveResult(tuple(sorted(order[p] for p in pos)), "mscs", "path-overlay")


def _circular_blocks(colors):
    n = len(colors)
    cut = next((i for i in range(n) if colors[i] != colors[i - 1]), None)
    if cut is None:
        return [list(range(n))]
    out = [[cut]]
    for step in range(1, n):
        i = (cut + step) % n
        if colors[i] == colors[i - 1]:
            out[-1].append(i)
        else:
            out.append([i])
    return out


def solve_mscs_cycle(g: ColoredGraph) -> SolveResult:
    order = _need(g, "cycle").order
    n = len(order)
    colors = [g.colors[v] for v in order]
    if len(set(colors)) == 1:
        return SolveResult((min(order),), "mscs", "cycle-overlay")
    block = min(_circular_blocks(colors), key=lambda b: (len(b), min(order[i] for i in b)))
    best = None
    for b in block:
        idx = [(b + t) % n for t in range(n)] + [b]
        cost, pos = segment_mscs([colors[i] for i in idx], True, True)
        if cost is INF:
            continue
        wit = tuple(sorted({order[idx[p]] for p in pos}))
        if best is None or (len(wit), wit) < (len(best), best):
            best = wit
    assert best is not None
    return SolveResult(best, "mscs", "cycle-overlay")


# -- spiders -------------------------------------------------------------------

def _legs(g: ColoredGraph, center: int) -> list[list[int]]:
    legs = []
    for start in g.neighbors(center):
        leg, prev = [start], center
        while True:
            nxt = [u for u in g.neighbors(leg[-1]) if u != prev]
            if not nxt:
                break
            prev = leg[-1]
            leg.append(nxt[0])
        legs.append(leg)
    return legs


def solve_mscs_spider(g: ColoredGraph) -> SolveResult:
    c = _need(g, "spider").center
    col = g.colors
    if len(set(col)) == 1:
        return SolveResult((0,), "mscs", "spider-legs")
    legs = _legs(g, c)
    # center block members as (leg index or -1, position on leg)
    members = [(-1, 0)]
    for j, leg in enumerate(legs):
        for q, v in enumerate(leg):
            if col[v] != col[c]:
                break
            members.append((j, q))
    best = None
    for j, q in members:
        delta = q + 1 if j >= 0 else 0
        b = legs[j][q] if j >= 0 else c
        total, chosen = 1, {b}
        for i, leg in enumerate(legs):
            if i == j:
                seq = leg[q:]
                lane_min = 0
            else:
                seq = (list(reversed(legs[j][:q + 1])) if j >= 0 else []) + [c] + leg
                lane_min = 2 * delta
            cost, pos = segment_mscs([col[v] for v in seq], True, False, lane_min)
            if cost is INF:
                total = None
                break
            total += cost - 1
            chosen.update(seq[p] for p in pos)
        if total is None:
            continue
        wit = tuple(sorted(chosen))
        assert len(wit) == total
        if best is None or (len(wit), wit) < (len(best), best):
            best = wit
    assert best is not None
    return SolveResult(best, "mscs", "spider-legs")


# -- combs ---------------------------------------------------------------------

class CombTables:
    """Tooth tables for a comb.

    ``P[x][t]`` is one plus the fewest chosen vertices inside tooth ``t`` when
    the nearest chosen vertex seen from skeleton vertex ``t`` is ``x``
    (computed by the constrained path routine). ``Q[x][t]`` sums ``P[x]`` over
    the skeleton indices from ``x``'s column to ``t`` inclusive; infeasible
    entries are None in ``P`` and counted separately in ``Qinf``.
    """

    def __init__(self, g: ColoredGraph, skeleton, teeth):
        self.skeleton = skeleton
        self.teeth = teeth
        k = len(skeleton)
        n = g.n
        self.column = [0] * n
        self.height = [0] * n
        for t, s in enumerate(skeleton):
            self.column[s] = t
            for h, v in enumerate(teeth[t], 1):
                self.column[v] = t
                self.height[v] = h
        self._colors = g.colors
        self._tooth_cost: dict[tuple[int, int], int | Infinity] = {}
        self.P = []
        self.Q = []
        self.Qinf = []
        for x in range(n):
            r = self.column[x]
            prow = []
            for t in range(k):
                tc = self.tooth_cost(t, self.dist(x, skeleton[t]))
                prow.append(None if tc is INF else tc + 1)
            qrow = [0] * k
            irow = [0] * k
            for span in (range(r, k), range(r, -1, -1)):
                acc = inf = 0
                for t in span:
                    if prow[t] is None:
                        inf += 1
                    else:
                        acc += prow[t]
                    qrow[t], irow[t] = acc, inf
            self.P.append(prow)
            self.Q.append(qrow)
            self.Qinf.append(irow)

    def tooth_cost(self, t: int, D: int):
        """Fewest chosen vertices in tooth ``t`` when skeleton vertex ``t`` sees
        its nearest chosen vertex at distance ``D``."""
        key = (t, D)
        if key not in self._tooth_cost:
            tooth = [self._colors[v] for v in self.teeth[t]]
            if not tooth:
                val = 0
            else:
                c = self._colors[self.skeleton[t]]
                cost, _ = segment_mscs([c] * (D + 1) + tooth, True, False, 2 * D)
                val = INF if cost is INF else cost - 1
            self._tooth_cost[key] = val
        return self._tooth_cost[key]

    def dist(self, a: int, b: int) -> int:
        ca, cb = self.column[a], self.column[b]
        ha, hb = self.height[a], self.height[b]
        if ca == cb:
            return abs(ha - hb)
        return ha + abs(ca - cb) + hb

    def range_sum(self, x: int, lo: int, hi: int):
        """Sum of ``P[x][t] - 1`` over ``lo <= t <= hi`` (INF if any is infeasible)."""
        if lo > hi:
            return 0
        r = self.column[x]
        Q, I, P = self.Q[x], self.Qinf[x], self.P[x]
        if lo > r:
            s, inf = Q[hi] - Q[lo - 1], I[hi] - I[lo - 1]
        elif hi < r:
            s, inf = Q[lo] - Q[hi + 1], I[lo] - I[hi + 1]
        else:
            mid_inf = P[r] is None
            s = Q[lo] + Q[hi] - (0 if mid_inf else P[r])
            inf = I[lo] + I[hi] - mid_inf
        if inf:
            return INF
        return s - (hi - lo + 1)


class CombSolver(TreeSolver):
    """Tree dynamic program whose per-candidate cost is O(1) via the tooth tables."""

    algorithm = "comb-tables"

    def __init__(self, g: ColoredGraph, skeleton, teeth):
        super().__init__(g)
        self.tables = CombTables(g, skeleton, teeth)
        self.dist = self.tables.dist

    def _step(self, v: int, target: int) -> int:
        """Neighbor of ``v`` on the path to ``target``."""
        tb = self.tables
        cv, ct = tb.column[v], tb.column[target]
        hv = tb.height[v]
        if cv == ct:
            h = hv + (1 if tb.height[target] > hv else -1)
        elif hv:
            h = hv - 1
        else:
            cv += 1 if ct > cv else -1
            h = 0
        return tb.skeleton[cv] if h == 0 else tb.teeth[cv][h - 1]

    def _cost(self, u, y, D, z, L, path, bound, rep):
        tb = self.tables
        dist = tb.dist
        col, ht = tb.column, tb.height
        total = 1
        specials = []
        cy, cz = col[y], col[z]
        on_skeleton = cy != cz or min(ht[y], ht[z]) == 0
        if on_skeleton:
            a, b = cy, cz
            sa, sb = tb.skeleton[a], tb.skeleton[b]
            step = 1 if b >= a else -1
            # teeth on the path itself are excluded from the range
            lo = a
            if ht[y] > 0 or (y == sa and ht[u] > 0 and col[u] == a):
                lo = a + step
            hi = b if ht[z] == 0 else b - step
            if (hi - lo) * step >= 0:
                base = dist(u, sa) + (lo - a) * step
                span = (hi - lo) * step
                # x-side while 2 d(u, s_t) <= L - D
                kx = (L - D - 2 * base) // 2
                kx = -1 if kx < 0 else min(kx, span)
                if kx >= 0:
                    first, last = lo, lo + kx * step
                    s = tb.range_sum(rep, min(first, last), max(first, last))
                    if s is INF:
                        return INF
                    total += s
                if kx < span:
                    first, last = lo + (kx + 1) * step, hi
                    s = tb.range_sum(z, min(first, last), max(first, last))
                    if s is INF:
                        return INF
                    total += s
            specials = [sa] if sa == sb else [sa, sb]
            if z not in specials:
                specials.append(z)
        else:
            specials = [z]
        du_z = L
        for p in specials:
            pred = u if p == y else self._step(p, u)
            succ = -1 if p == z else self._step(p, z)
            is_skel = ht[p] == 0
            dp = dist(u, p)
            dx, dz = D + dp, du_z - dp
            for w in self.nbrs[p]:
                if w == pred or w == succ or (is_skel and ht[w] == 1):
                    continue
                s = self._G(p, w, dx, rep) if dx <= dz else self._G(p, w, dz, z)
                if s is INF:
                    return INF
                total += s
                if total > bound:
                    return None
        return total if total <= bound else None

    def _collect(self, roots, out: set[int]) -> None:
        tb = self.tables
        stack = list(roots)
        while stack:
            key = stack.pop()
            if key in self.memo:
                cost, z = self.memo[key]
                if z is not None:
                    out.add(z)
                    stack.extend(self._children(*key, z))
                continue
            # a whole tooth priced from the tables
            p, w, D = key
            t = tb.column[p]
            tooth = tb.teeth[t]
            assert tb.height[p] == 0 and tooth and tooth[0] == w
            seq = [self.colors[p]] * (D + 1) + [self.colors[v] for v in tooth]
            _, pos = segment_mscs(seq, True, False, 2 * D)
            out.update(tooth[i - D - 1] for i in pos if i > D)


def solve_mscs_comb(g: ColoredGraph) -> SolveResult:
    cls = _need(g, "comb")
    if len(set(g.colors)) == 1:
        return SolveResult((0,), "mscs", "comb-tables")
    solver = CombSolver(g, cls.skeleton, cls.teeth)
    return SolveResult(solver.solve(), "mscs", "comb-tables")


SOLVERS = {
    "path": solve_mscs_path,
    "cycle": solve_mscs_cycle,
    "spider": solve_mscs_spider,
    "comb": solve_mscs_comb,
}
