"""Command-line front end: ``mscs solve|verify|approx|reduce|gen|bench``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .approx import two_approx_mscs_tree
from .consistency import VERIFIERS
from .fast import SOLVERS
from .generators import SHAPES, generate
from .graph import InstanceError, classify, read_graph, recognize
from .oracle import BRUTE, DEFAULT_CAP, CapExceeded, brute_dominating, brute_max2sat, parse_dimacs
from .reductions import (
    check_forward_witness, check_max2sat_structure, certify_reduction, dominating_to_mcs,
    dominating_to_mscs, max2sat_to_tree_mcs,
)
from .tree_dp import solve_mscs_tree, solve_mscs_tree_weighted

log = logging.getLogger("mscs")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _has_weights(g) -> bool:
    return g.weighted and any(w != 1 for _, _, w in g.edges())


def dispatch(g, problem: str, cls: str, cap: int):
    """Pick and run a solver; returns the SolveResult."""
    if problem != "mscs":
        if cls not in ("auto", "brute"):
            raise UsageError(f"no polynomial {problem} solver for class {cls!r}; use --class brute")
        return BRUTE[problem](g, cap=cap)
    if cls == "brute":
        return BRUTE["mscs"](g, cap=cap)
    weighted = _has_weights(g)
    if cls == "auto":
        kind = classify(g).kind
    else:
        if recognize(g, cls) is None:
            raise InstanceError(f"instance is not a {cls}")
        kind = cls
    if weighted:
        if kind in ("path", "spider", "comb", "tree"):
            if cls not in ("auto", "tree"):
                raise UsageError(f"the {cls} solver is unweighted; use --class tree")
            return solve_mscs_tree_weighted(g)
        if cls != "auto":
            raise UsageError(f"the {cls} solver is unweighted")
        log.warning("no polynomial solver for weighted %s instances; using exhaustive search", kind)
        return BRUTE["mscs"](g, cap=cap)
    if kind in SOLVERS:
        return SOLVERS[kind](g)
    if kind == "tree":
        return solve_mscs_tree(g)
    log.warning("no polynomial MSCS solver for general graphs; using exhaustive search")
    return BRUTE["mscs"](g, cap=cap)


def _report(result, verified, as_json: bool) -> str:
    if as_json:
        doc = result.as_dict()
        if verified is not None:
            doc["verified"] = verified
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = [f"problem: {result.problem}", f"algorithm: {result.algorithm}",
             f"size: {result.size}", "witness: " + ",".join(map(str, result.witness))]
    if verified is not None:
        lines.append(f"verified: {'yes' if verified else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    g = read_graph(args.input)
    start = time.perf_counter()
    result = dispatch(g, args.problem, args.cls, args.cap)
    elapsed = time.perf_counter() - start
    verified = None
    if args.verify:
        mode = {"mcs": "cs", "mscs": "scs", "mcss": "css"}[args.problem]
        verified = VERIFIERS[mode](g, result.witness).holds
    _emit(_report(result, verified, args.json), args.output)
    print(f"time: {elapsed:.6f}s", file=sys.stderr)
    return EXIT_FAIL if verified is False else EXIT_OK


def cmd_approx(args) -> int:
    g = read_graph(args.input)
    result = two_approx_mscs_tree(g)
    verified = VERIFIERS["scs"](g, result.witness).holds if args.verify else None
    _emit(_report(result, verified, args.json), args.output)
    return EXIT_FAIL if verified is False else EXIT_OK


def _parse_subset(text: str, n: int) -> list[int]:
    try:
        S = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad subset {text!r}") from None
    if not S:
        raise UsageError("empty subset")
    bad = [v for v in S if not 0 <= v < n]
    if bad:
        raise UsageError(f"subset ids out of range: {bad}")
    return S


def cmd_verify(args) -> int:
    g = read_graph(args.input)
    S = _parse_subset(args.subset, g.n)
    rep = VERIFIERS[args.mode](g, S)
    if args.json:
        doc = {"mode": rep.mode, "holds": rep.holds,
               "violations": [{"vertex": v.vertex, "nearest": list(v.nearest),
                               "colors": list(v.colors), "reason": v.reason} for v in rep.violations]}
        text = json.dumps(doc, sort_keys=True) + "\n"
    else:
        lines = [f"{rep.mode}: {'holds' if rep.holds else 'fails'}"]
        lines += [f"violation at vertex {v.vertex}: nearest {list(v.nearest)} colors {list(v.colors)} ({v.reason})"
                  for v in rep.violations]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if rep.holds else EXIT_FAIL


def cmd_reduce(args) -> int:
    if args.kind == "max2sat-to-tree":
        try:
            n_vars, clauses = parse_dimacs(Path(args.input).read_text(encoding="utf-8"))
        except ValueError as exc:
            raise InstanceError(str(exc)) from None
        inst = max2sat_to_tree_mcs(n_vars, clauses, args.stabilizer)
    else:
        g = read_graph(args.input)
        if args.kind == "dominating-to-mcs":
            inst = dominating_to_mcs(g)
        else:
            inst = dominating_to_mscs(g, Fraction(args.eps), args.scale)
    _emit(inst.target.dumps(), args.output)
    sidecar = json.dumps(inst.sidecar(), sort_keys=True, indent=1) + "\n"
    if args.output:
        Path(args.output + ".meta.json").write_text(sidecar, encoding="utf-8")
    status = EXIT_OK
    if args.certify:
        if args.kind == "max2sat-to-tree":
            k, assignment = brute_max2sat(n_vars, clauses)
            problems = check_max2sat_structure(inst)
            holds, size, expected = check_forward_witness(inst, assignment)
            ok = not problems and holds and size == expected
            detail = f"structure and forward witness for k*={k}, size {size}"
        else:
            gamma = brute_dominating(g, cap=args.cap).size
            ok = certify_reduction(inst, gamma, cap=args.cap)
            detail = f"gamma={gamma}, expected optimum {inst.expected_size(gamma)}"
        print(f"certificate {'OK' if ok else 'FAILED'} ({detail})", file=sys.stderr)
        status = EXIT_OK if ok else EXIT_FAIL
    return status


def cmd_gen(args) -> int:
    try:
        g = generate(args.shape, args.n, args.colors, args.seed, legs=args.legs, teeth=args.teeth,
                     max_weight=args.max_weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(g.dumps(), args.output)
    return EXIT_OK


def _bench_one(job):
    shape, n, seed, colors, solver, cap = job
    g = generate(shape, n, colors, seed)
    start = time.perf_counter()
    if solver == "auto":
        res = dispatch(g, "mscs", "auto", cap)
    elif solver == "tree":
        res = solve_mscs_tree(g)
    elif solver == "brute":
        res = BRUTE["mscs"](g, cap=cap)
    elif solver == "approx":
        res = two_approx_mscs_tree(g)
    else:
        res = SOLVERS[solver](g)
    return (shape, n, seed, solver, res.size, f"{time.perf_counter() - start:.6f}")


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
    except ValueError:
        raise UsageError(f"bad size ladder {args.sizes!r}") from None
    jobs = [(args.shape, n, args.seed + r, args.colors, s, args.cap)
            for n in sizes for r in range(args.repeats) for s in args.solver]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["shape", "n", "seed", "solver", "size", "seconds"])
    w.writerows(rows)
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mscs", description="Minimum (strict) consistent subsets of colored graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", "-i", required=True, help="instance file")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("solve", help="solve MCS / MSCS / MCSS")
    common(s)
    s.add_argument("--problem", choices=["mcs", "mscs", "mcss"], default="mscs")
    s.add_argument("--class", dest="cls", default="auto",
                   choices=["auto", "path", "cycle", "spider", "comb", "tree", "brute"])
    s.add_argument("--verify", action="store_true", help="re-check the witness")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex cap for exhaustive search")
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("approx", help="block-tree 2-approximation on trees")
    common(a)
    a.add_argument("--verify", action="store_true")
    a.set_defaults(func=cmd_approx)

    v = sub.add_parser("verify", help="check a subset")
    common(v)
    v.add_argument("--subset", required=True, help="comma-separated vertex ids")
    v.add_argument("--mode", choices=sorted(VERIFIERS), default="scs")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="emit a hardness-reduction instance")
    r.add_argument("kind", choices=["dominating-to-mcs", "dominating-to-mscs", "max2sat-to-tree"])
    common(r)
    r.add_argument("--stabilizer", type=int, default=None, help="stabilizer pairs per variable")
    r.add_argument("--eps", default="1/4")
    r.add_argument("--scale", type=int, default=2)
    r.add_argument("--certify", action="store_true")
    r.add_argument("--cap", type=int, default=DEFAULT_CAP)
    r.set_defaults(func=cmd_reduce)

    gsp = sub.add_parser("gen", help="generate a random instance")
    common(gsp, needs_input=False)
    gsp.add_argument("--shape", choices=SHAPES, required=True)
    gsp.add_argument("--n", type=int, required=True)
    gsp.add_argument("--colors", type=int, default=2)
    gsp.add_argument("--legs", type=int)
    gsp.add_argument("--teeth", type=int)
    gsp.add_argument("--max-weight", type=int, default=1)
    gsp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time solvers over a size ladder (CSV)")
    common(b, needs_input=False)
    b.add_argument("--shape", choices=SHAPES, required=True)
    b.add_argument("--sizes", required=True, help="comma-separated n values")
    b.add_argument("--colors", type=int, default=2)
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--solver", action="append", default=None,
                   choices=["auto", "tree", "brute", "approx", *SOLVERS])
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--cap", type=int, default=DEFAULT_CAP)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if getattr(args, "solver", "x") is None:
        args.solver = ["auto"]
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
