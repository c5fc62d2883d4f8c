"""Exhaustive solvers used as ground truth on small instances.

Subsets are scanned by increasing cardinality and lexicographically within a
cardinality, so the returned witness is the lexicographically first optimum.
"""
from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .graph import ColoredGraph, DistanceOracle, SolveResult, blocks

DEFAULT_CAP = 22
_CHUNK = 1 << 15


class CapExceeded(RuntimeError):
    pass


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the exhaustive-search cap of {cap}")


def _combination_chunks(n: int, k: int):
    it = itertools.combinations(range(n), k)
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64).reshape(len(chunk), k)


def _scan(g: ColoredGraph, mode: str, cap: int) -> tuple[int, ...]:
    _check_cap(g.n, cap)
    n = g.n
    dm = DistanceOracle(g).matrix()
    col = np.array(g.colors, dtype=np.int64)
    bd = blocks(g)
    block_of = np.array(bd.block_of, dtype=np.int64)
    full_blocks = (1 << bd.count) - 1
    if mode == "mcs":
        start = len(set(g.colors))
    else:
        # every strict/spanning subset meets each block
        start = bd.count
    for k in range(max(1, start), n + 1):
        for C in _combination_chunks(n, k):
            d = dm[:, C].transpose(1, 0, 2)            # (subsets, vertex, member)
            near = d == d.min(axis=2, keepdims=True)
            cs = col[C][:, None, :]
            cv = col[None, :, None]
            if mode == "mscs":
                ok = ~(near & (cs != cv)).any(axis=(1, 2))
            else:
                ok = (near & (cs == cv)).any(axis=2).all(axis=1)
                if mode == "mcss":
                    bits = np.bitwise_or.reduce(np.left_shift(1, block_of[C]), axis=1)
                    ok &= bits == full_blocks
            hits = np.flatnonzero(ok)
            if hits.size:
                return tuple(int(v) for v in C[hits[0]])
    raise AssertionError("the full vertex set is always consistent")


def brute_mcs(g: ColoredGraph, cap: int = DEFAULT_CAP) -> SolveResult:
    return SolveResult(_scan(g, "mcs", cap), "mcs", "brute")


def brute_mscs(g: ColoredGraph, cap: int = DEFAULT_CAP) -> SolveResult:
    return SolveResult(_scan(g, "mscs", cap), "mscs", "brute")


def brute_mcss(g: ColoredGraph, cap: int = DEFAULT_CAP) -> SolveResult:
    return SolveResult(_scan(g, "mcss", cap), "mcss", "brute")


BRUTE = {"mcs": brute_mcs, "mscs": brute_mscs, "mcss": brute_mcss}


def brute_dominating(g: ColoredGraph, cap: int = DEFAULT_CAP) -> SolveResult:
    """Minimum dominating set (colors ignored)."""
    _check_cap(g.n, cap)
    closed = [1 << v for v in range(g.n)]
    for v in range(g.n):
        for u, _ in g.adj[v]:
            closed[v] |= 1 << u
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for U in itertools.combinations(range(g.n), k):
            mask = 0
            for v in U:
                mask |= closed[v]
            if mask == full:
                return SolveResult(U, "dominating", "brute")
    raise AssertionError("V dominates itself")


# -- MAX-2SAT ----------------------------------------------------------------

def check_2cnf(n_vars: int, clauses) -> list[tuple[int, int]]:
    out = []
    for cl in clauses:
        cl = tuple(cl)
        if len(cl) != 2:
            raise ValueError(f"clause {cl} does not have exactly 2 literals")
        a, b = cl
        for lit in cl:
            if not isinstance(lit, int) or lit == 0 or abs(lit) > n_vars:
                raise ValueError(f"bad literal {lit!r} in clause {cl}")
        if abs(a) == abs(b):
            raise ValueError(f"clause {cl} repeats variable {abs(a)}")
        out.append((a, b))
    return out


def literal_true(lit: int, assignment) -> bool:
    """``assignment[i]`` is the value of variable ``i + 1``."""
    v = assignment[abs(lit) - 1]
    return bool(v) if lit > 0 else not v


def count_satisfied(clauses, assignment) -> int:
    return sum(literal_true(a, assignment) or literal_true(b, assignment) for a, b in clauses)


def brute_max2sat(n_vars: int, clauses) -> tuple[int, tuple[bool, ...]]:
    """Maximum number of simultaneously satisfiable clauses and a witness.

    Assignments are scanned as integers (bit ``i`` = variable ``i + 1``); the
    first maximizer wins.
    """
    if n_vars > 24:
        raise CapExceeded(f"{n_vars} variables exceeds the MAX-2SAT cap of 24")
    clauses = check_2cnf(n_vars, clauses)
    best, best_a = -1, 0
    total = 1 << n_vars
    step = 1 << 18
    for lo in range(0, total, step):
        a = np.arange(lo, min(total, lo + step), dtype=np.int64)
        sat = np.zeros(a.shape, dtype=np.int64)
        for x, y in clauses:
            vx = ((a >> (abs(x) - 1)) & 1).astype(bool)
            vy = ((a >> (abs(y) - 1)) & 1).astype(bool)
            if x < 0:
                vx = ~vx
            if y < 0:
                vy = ~vy
            sat += vx | vy
        i = int(np.argmax(sat))
        if sat[i] > best:
            best, best_a = int(sat[i]), int(a[i])
    return best, tuple(bool(best_a >> i & 1) for i in range(n_vars))


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """DIMACS CNF restricted to 2-literal clauses."""
    n_vars = None
    declared = None
    clauses = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"invalid problem line: {line!r}")
            n_vars, declared = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise ValueError("clause before the problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise ValueError("last clause is not terminated by 0")
    if n_vars is None:
        raise ValueError("missing problem line")
    if declared != len(clauses):
        raise ValueError(f"problem line declares {declared} clauses, found {len(clauses)}")
    return n_vars, check_2cnf(n_vars, clauses)


def format_dimacs(n_vars: int, clauses) -> str:
    lines = [f"p cnf {n_vars} {len(clauses)}"]
    lines += [f"{a} {b} 0" for a, b in clauses]
    return "\n".join(lines) + "\n"


def subsets_estimate(n: int, k: int) -> int:
    return sum(comb(n, i) for i in range(k, n + 1))
