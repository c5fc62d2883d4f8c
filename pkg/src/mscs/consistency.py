"""Checks for consistent (CS), strict consistent (SCS) and consistent
spanning (CSS) subsets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import ColoredGraph, DistanceOracle, blocks


@dataclass(frozen=True)
class Violation:
    vertex: int
    nearest: tuple[int, ...]
    colors: tuple[int, ...]
    reason: str = "nearest-neighbor colors"


@dataclass(frozen=True)
class VerifyReport:
    mode: str
    violations: tuple[Violation, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.holds


def _subset(g: ColoredGraph, S: Iterable[int]) -> list[int]:
    S = sorted(set(S))
    if not S:
        raise ValueError("subset must be non-empty")
    bad = [v for v in S if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise ValueError(f"subset ids out of range: {bad}")
    return S


def nearest_table(g: ColoredGraph, S: list[int], oracle: DistanceOracle | None = None):
    """For every vertex, the tuple of members of ``S`` at minimum distance."""
    oracle = oracle or DistanceOracle(g)
    rows = [oracle.row(s) for s in S]
    out = []
    for v in range(g.n):
        best = min(r[v] for r in rows)
        out.append(tuple(s for s, r in zip(S, rows) if r[v] == best))
    return out


def _check(g, S, strict, oracle):
    S = _subset(g, S)
    violations = []
    for v, nn in enumerate(nearest_table(g, S, oracle)):
        seen = tuple(sorted({g.colors[s] for s in nn}))
        cv = g.colors[v]
        ok = seen == (cv,) if strict else cv in seen
        if not ok:
            violations.append(Violation(v, nn, seen))
    return S, violations


def verify_cs(g: ColoredGraph, S: Iterable[int], oracle: DistanceOracle | None = None) -> VerifyReport:
    """Every vertex sees its own color among its nearest members of ``S``."""
    _, violations = _check(g, S, False, oracle)
    return VerifyReport("CS", tuple(violations))


def verify_scs(g: ColoredGraph, S: Iterable[int], oracle: DistanceOracle | None = None) -> VerifyReport:
    """Every nearest member of ``S`` has the vertex's color (ties unanimous)."""
    _, violations = _check(g, S, True, oracle)
    return VerifyReport("SCS", tuple(violations))


def verify_css(g: ColoredGraph, S: Iterable[int], oracle: DistanceOracle | None = None) -> VerifyReport:
    """A consistent subset that meets every block."""
    oracle = oracle or DistanceOracle(g)
    S, violations = _check(g, S, False, oracle)
    bd = blocks(g)
    hit = {bd.block_of[s] for s in S}
    table = None
    for b, members in enumerate(bd.members):
        if b in hit:
            continue
        table = table or nearest_table(g, S, oracle)
        v = members[0]
        nn = table[v]
        violations.append(Violation(v, nn, tuple(sorted({g.colors[s] for s in nn})),
                                    reason=f"block {b} has no member in the subset"))
    return VerifyReport("CSS", tuple(violations))


VERIFIERS = {"cs": verify_cs, "scs": verify_scs, "css": verify_css}
