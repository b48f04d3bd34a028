"""Command line front end.

Exit codes: 0 success / "yes", 1 "no" (hampath, hamcycle), 2 bad input or
usage, 3 oracle mismatch in ``check``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import coloring, ham, mdtree, oracles
from .errors import CapacityError, ParseError
from .formats import FORMATS, emit, emit_graph6, parse, sniff
from .gen import NAMED, connected_atlas, gen_bounded_mw, gen_named, random_corpus
from .graph import Graph
from .validate import coloring_problem, cycle_problem, path_partition_problem

SCHEMA = 1


class InputError(Exception):
    pass


def _read_graph(args) -> Graph:
    try:
        if args.input == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.input, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    fmt = args.format
    if fmt is None:
        fmt = sniff(data)
        print(f"warning: no --format given, guessing {fmt}", file=sys.stderr)
    try:
        return parse(fmt, data)
    except (ParseError, ValueError) as exc:
        raise InputError(f"bad {fmt} input: {exc}") from None


def _dump(obj) -> None:
    # deep trees nest deeply; json's encoder recurses once per level
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))
    print(json.dumps(obj, separators=(",", ":")))


def _solver_opts(args) -> dict:
    return {"eager_cuts": args.eager_cuts, "linear_scan": args.linear_scan}


# -- subcommands ---------------------------------------------------------------

def cmd_decompose(args) -> int:
    g = _read_graph(args)
    tree = mdtree.modular_decomposition(g)
    if args.dot:
        sys.stdout.write(mdtree.to_dot(tree))
    else:
        _dump({"schema": SCHEMA, "n": g.n, "width": mdtree.modular_width(tree), "tree": mdtree.to_dict(tree)})
    return 0


def cmd_width(args) -> int:
    g = _read_graph(args)
    print(mdtree.modular_width(mdtree.modular_decomposition(g)))
    return 0


def cmd_nd(args) -> int:
    g = _read_graph(args)
    print(mdtree.neighborhood_diversity(g)[0])
    return 0


def cmd_color(args) -> int:
    g = _read_graph(args)
    tree = mdtree.modular_decomposition(g)
    out = {
        "schema": SCHEMA,
        "chi": coloring.chromatic_number(g, tree, fast=args.fast_mwp),
        "tree_width_used": mdtree.modular_width(tree),
    }
    if args.witness:
        out["witness"] = list(coloring.coloring_witness(g, tree).colors)
    _dump(out)
    return 0


def cmd_paths(args) -> int:
    g = _read_graph(args)
    tree = mdtree.modular_decomposition(g)
    out = {"schema": SCHEMA, "ham": ham.ham_number(g, tree, **_solver_opts(args)), "size": g.n}
    if args.witness:
        out["witness"] = ham.path_partition_witness(g, tree, **_solver_opts(args))
    _dump(out)
    return 0


def cmd_hampath(args) -> int:
    g = _read_graph(args)
    tree = mdtree.modular_decomposition(g)
    yes = ham.ham_number(g, tree, **_solver_opts(args)) == 1
    print("yes" if yes else "no")
    if yes and args.witness:
        _dump({"schema": SCHEMA, "witness": ham.path_partition_witness(g, tree, **_solver_opts(args))[0]})
    return 0 if yes else 1


def cmd_hamcycle(args) -> int:
    g = _read_graph(args)
    cycle = ham.cycle_witness(g, **_solver_opts(args)) if args.witness else None
    yes = cycle is not None if args.witness else ham.hamiltonian_cycle(g, **_solver_opts(args))
    print("yes" if yes else "no")
    if cycle is not None:
        _dump({"schema": SCHEMA, "witness": cycle})
    return 0 if yes else 1


def cmd_gen(args) -> int:
    try:
        if args.family == "bounded":
            if len(args.params) != 1:
                raise ValueError("bounded takes one parameter: the vertex count")
            g = gen_bounded_mw(int(args.params[0]), args.width, seed=args.seed)
        else:
            g = gen_named(args.family, *(int(p) for p in args.params))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.buffer.write(emit(g, args.format or "graph6"))
    return 0


def _check_one(g: Graph, witness: bool, opts: dict) -> list[str]:
    """Names of the quantities on which the FPT code and the oracles differ."""
    bad = []
    tree = mdtree.modular_decomposition(g)
    width = mdtree.modular_width(tree)
    if g.n <= oracles.CAPS["modular_width"] and width != oracles.brute_modular_width(g):
        bad.append("modular-width")
    if width > mdtree.neighborhood_diversity(g)[0]:
        bad.append("mw<=nd")
    chi = coloring.chromatic_number(g, tree)
    if chi != oracles.brute_chromatic(g):
        bad.append("chromatic")
    h = ham.ham_number(g, tree, **opts)
    if h != oracles.brute_path_partition(g):
        bad.append("ham")
    cyc = ham.hamiltonian_cycle(g, tree, **opts)
    if cyc != oracles.held_karp_hamiltonian(g):
        bad.append("hamcycle")
    if witness:
        if coloring_problem(g, coloring.coloring_witness(g, tree).colors, chi):
            bad.append("coloring-witness")
        if path_partition_problem(g, ham.path_partition_witness(g, tree, **opts), h):
            bad.append("paths-witness")
        if cyc:
            cw = ham.cycle_witness(g, tree, **opts)
            if cw is None or cycle_problem(g, cw):
                bad.append("cycle-witness")
    return bad


def cmd_check(args) -> int:
    corpus: list[Graph] = []
    try:
        if args.all_connected:
            corpus += connected_atlas(args.max_n)
        if args.random:
            corpus += random_corpus(args.random, args.max_n, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not corpus:
        raise InputError("empty corpus: pass --all-connected and/or --random COUNT")
    opts = _solver_opts(args)
    try:
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            results = list(pool.map(lambda g: _check_one(g, args.witness, opts), corpus))
    except CapacityError as exc:
        raise InputError(f"corpus too large for the oracles: {exc}") from None
    failures = [(g, bad) for g, bad in zip(corpus, results) if bad]
    for g, bad in failures:
        print(f"MISMATCH {emit_graph6(g).decode().strip()} {','.join(bad)}")
    print(f"checked {len(corpus)} graphs, {len(failures)} mismatches")
    return 3 if failures else 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "mw", "seed", "problem", "seconds"])
    opts = _solver_opts(args)

    def run(n, seed):
        g = gen_bounded_mw(n, args.width, seed=seed)
        ham.clear_cache()
        t0 = time.perf_counter()
        tree = mdtree.modular_decomposition(g)
        width = mdtree.modular_width(tree)
        t1 = time.perf_counter()
        coloring.chromatic_number(g, tree, fast=args.fast_mwp)
        t2 = time.perf_counter()
        ham.ham_number(g, tree, **opts)
        t3 = time.perf_counter()
        return [(n, width, seed, "decompose", t1 - t0), (n, width, seed, "chromatic", t2 - t1),
                (n, width, seed, "ham", t3 - t2)]

    # one untimed run first, so library imports do not land on the smallest size
    run(min(sizes), args.seed - 1)
    # timings are taken one instance at a time so they do not contend
    for n in sizes:
        for seed in range(args.seed, args.seed + args.repeats):
            for *row, secs in run(n, seed):
                writer.writerow([*row, f"{secs:.4f}"])
    return 0


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modwidth", description="Graph algorithms parameterized by modular-width.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
        p.add_argument("--format", choices=FORMATS, help="input format (guessed with a warning if omitted)")

    def ham_flags(p):
        cuts = p.add_mutually_exclusive_group()
        cuts.add_argument("--lazy-cuts", dest="eager_cuts", action="store_false", help="separate connectivity cuts on demand (default)")
        cuts.add_argument("--eager-cuts", dest="eager_cuts", action="store_true", help="add every connectivity cut up front")
        p.add_argument("--linear-scan", action="store_true", help="scan l upward instead of searching")
        p.set_defaults(eager_cuts=False)

    p = sub.add_parser("decompose", help="modular decomposition tree as JSON or DOT")
    graph_input(p)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("width", help="modular-width")
    graph_input(p)
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("nd", help="neighborhood diversity")
    graph_input(p)
    p.set_defaults(func=cmd_nd)

    p = sub.add_parser("color", help="chromatic number")
    graph_input(p)
    p.add_argument("--witness", action="store_true", help="include an optimal coloring")
    p.add_argument("--fast-mwp", action="store_true", help="cross-check with the transform-based partition solver")
    p.set_defaults(func=cmd_color)

    for name, func, text in (
        ("paths", cmd_paths, "minimum partition into paths"),
        ("hampath", cmd_hampath, "Hamiltonian path: yes (exit 0) or no (exit 1)"),
        ("hamcycle", cmd_hamcycle, "Hamiltonian cycle: yes (exit 0) or no (exit 1)"),
    ):
        p = sub.add_parser(name, help=text)
        graph_input(p)
        p.add_argument("--witness", action="store_true", help="also print a witness")
        ham_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("family", choices=["bounded", *sorted(NAMED)], help="'bounded N' or a named family")
    p.add_argument("params", nargs="*", help="integer parameters of the family")
    p.add_argument("--width", type=int, default=4, help="width bound for 'bounded' (default 4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, help="output format (default graph6)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="compare against brute-force oracles on a corpus")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--all-connected", action="store_true", help="every connected graph up to --max-n (at most 7)")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="add COUNT seeded random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness", action="store_true", help="validate witnesses too")
    ham_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="CSV timings on generated graphs")
    p.add_argument("--sizes", default="250,500,1000,2000")
    p.add_argument("--width", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1, help="instances per size, seeds seed..seed+repeats-1")
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; timings run serially")
    p.add_argument("--fast-mwp", action="store_true")
    ham_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
