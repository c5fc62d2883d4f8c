"""Block-tree 2-approximation for MSCS on trees."""
from __future__ import annotations

from .graph import ColoredGraph, SolveResult, blocks


def two_approx_mscs_tree(g: ColoredGraph) -> SolveResult:
    """Both endpoints of every edge joining two blocks."""
    if not g.is_tree():
        raise ValueError("instance is not a tree")
    bd = blocks(g)
    if bd.count == 1:
        return SolveResult((0,), "mscs", "two-approx")
    chosen: set[int] = set()
    for key, links in bd.links.items():
        assert len(links) == 1, "blocks of a tree meet along a single edge"
        chosen.update(links[0])
    return SolveResult(tuple(sorted(chosen)), "mscs", "two-approx")
