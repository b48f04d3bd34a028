"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are also
collected in the "acceptance criteria" section of the terminal summary.
"""

import csv
import io
import math
import random
import statistics
import time
from contextlib import redirect_stdout

from modwidth import oracles
from modwidth.cli import run
from modwidth.coloring import chromatic_number, coloring_witness
from modwidth.gen import gen_bounded_mw, gen_subdivided_star, random_graph
from modwidth.graph import Graph, add_universal, substitute
from modwidth.ham import cycle_witness, ham_number, hamiltonian_cycle, path_partition_witness
from modwidth.ilp import EQ, GE, LE, IlpInstance, feasible
from modwidth.mdtree import modular_decomposition, modular_width, neighborhood_diversity
from modwidth.partition import WeightedPartitionProblem, fast_partition_value, max_weighted_partition
from modwidth.validate import coloring_problem, cycle_problem, path_partition_problem


def test_c1_coloring_matches_oracle(atlas, random_graphs, verdict):
    start = time.perf_counter()
    seven = sum(g.n == 7 for g in atlas)
    bad = [g for g in atlas + random_graphs if chromatic_number(g) != oracles.brute_chromatic(g)]
    took = time.perf_counter() - start
    ok = verdict(
        "C1 chromatic_number == brute force",
        seven == 853 and not bad and took < 300,
        f"{len(atlas)} connected n<=7 ({seven} with n=7) + {len(random_graphs)} random, "
        f"{len(bad)} mismatches, {took:.1f}s",
    )
    assert ok


def test_c2_hamiltonicity_matches_oracles(atlas, random_graphs, verdict):
    bad_cycle, bad_ham = [], []
    for g in atlas + random_graphs:
        if hamiltonian_cycle(g) != oracles.held_karp_hamiltonian(g):
            bad_cycle.append(g)
        if ham_number(g) != oracles.brute_path_partition(g):
            bad_ham.append(g)
    ok = verdict(
        "C2 hamiltonian_cycle == Held-Karp and ham_number == brute force",
        not bad_cycle and not bad_ham,
        f"{len(bad_cycle)} cycle / {len(bad_ham)} ham mismatches",
    )
    assert ok


def _cographs():
    out = [Graph.complete(5), Graph.empty(4), Graph.complete(1)]
    out += [gen_bounded_mw(n, 2, seed=s) for n in (10, 50, 200) for s in range(5)]
    return out


def test_c3_structural_widths(verdict):
    stars = {k: modular_width(modular_decomposition(gen_subdivided_star(k))) for k in (2, 3, 4, 5)}
    cographs = [modular_width(modular_decomposition(g)) for g in _cographs()]
    ok = verdict(
        "C3 subdivided star width 2k+1, cographs width 0",
        all(w == 2 * k + 1 for k, w in stars.items()) and set(cographs) == {0},
        f"stars {stars}",
    )
    assert ok


def test_c4_width_at_most_nd(corpus, verdict):
    bad = [g for g in corpus if modular_width(modular_decomposition(g)) > neighborhood_diversity(g)[0]]
    ok = verdict("C4 mw <= nd", not bad, f"{len(corpus)} graphs, {len(bad)} violations")
    assert ok


def test_c5_clique_replacement(verdict):
    rng = random.Random(5)
    bad = 0
    for _ in range(200):
        q = random_graph(rng.randint(1, 5), rng.random(), rng)
        parts = [random_graph(rng.randint(1, 3), rng.random(), rng) for _ in range(q.n)]
        cliques = [Graph.complete(oracles.brute_chromatic(p)) for p in parts]
        # up to 5 * 3 = 15 vertices, past the oracle's default cap
        if oracles.brute_chromatic(substitute(q, parts), cap=15) != oracles.brute_chromatic(substitute(q, cliques), cap=15):
            bad += 1
    ok = verdict("C5 chi(H_K) == chi(H)", bad == 0, f"200 substitutions, {bad} mismatches")
    assert ok


def test_c6_universal_vertices_give_ham(atlas, verdict):
    bad = 0
    for g in atlas:
        i = 1
        while not oracles.held_karp_hamiltonian(add_universal(g, i), allow_degenerate=True):
            i += 1
        if i != oracles.brute_path_partition(g):
            bad += 1
    ok = verdict("C6 min{i : g+i Hamiltonian} == ham(g)", bad == 0, f"{len(atlas)} graphs, {bad} mismatches")
    assert ok


def test_c7_witnesses_validate(corpus, verdict):
    counts = {"coloring": 0, "paths": 0, "cycle": 0}
    bad = []
    for g in corpus:
        chi = chromatic_number(g)
        if coloring_problem(g, coloring_witness(g).colors, chi):
            bad.append(("coloring", g))
        counts["coloring"] += 1
        if path_partition_problem(g, path_partition_witness(g), ham_number(g)):
            bad.append(("paths", g))
        counts["paths"] += 1
        cyc = cycle_witness(g)
        if cyc is not None:
            counts["cycle"] += 1
            if cycle_problem(g, cyc):
                bad.append(("cycle", g))
        elif oracles.held_karp_hamiltonian(g):
            bad.append(("missing cycle", g))
    ok = verdict("C7 witnesses pass validators", not bad, f"{counts}, {len(bad)} invalid")
    assert ok


def _slope(xs, ys):
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = statistics.fmean(lx), statistics.fmean(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


def test_c8_scaling(verdict):
    sizes = [250, 500, 1000, 2000]
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert run(["bench", "--sizes", ",".join(map(str, sizes)), "--width", "8", "--repeats", "3", "--seed", "1"]) == 0
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    widths = {int(r["mw"]) for r in rows}
    report, ok = [], max(widths) <= 8
    for problem in ("chromatic", "ham"):
        times = {n: [float(r["seconds"]) for r in rows if r["problem"] == problem and int(r["n"]) == n] for n in sizes}
        worst = max(times[2000])
        slope = _slope(sizes, [statistics.median(times[n]) for n in sizes])
        ok = ok and worst < 10 and slope <= 1.5
        report.append(f"{problem}: max {worst:.2f}s at n=2000, exponent {slope:.2f}")
    ok = verdict("C8 n=2000 under 10s, fitted exponent <= 1.5", ok, "; ".join(report))
    assert ok


def test_c9_ilp_matches_grid(verdict):
    rng = random.Random(9)
    bad = 0
    for _ in range(1000):
        p = rng.randint(1, 6)
        lo = [rng.randint(-2, 2) for _ in range(p)]
        hi = [l + rng.randint(0, 4) for l in lo]
        rows = [
            ([rng.randint(-3, 3) for _ in range(p)], rng.choice([LE, EQ, GE]), rng.randint(-6, 8))
            for _ in range(rng.randint(0, 8))
        ]
        inst = IlpInstance(p, lo, hi, rows)
        x = feasible(inst)
        expected = oracles.grid_ilp_feasible(p, lo, hi, rows)
        if (x is None) != (expected is None) or (x is not None and not inst.check(x)):
            bad += 1
    ok = verdict("C9 ILP feasibility == grid enumeration", bad == 0, f"1000 instances, {bad} mismatches")
    assert ok


def test_c10_fast_partition_matches_dp(verdict):
    rng = random.Random(10)
    bad = 0
    for _ in range(300):
        size = rng.randint(1, 12)
        bound = rng.choice([1, 2, 4, 8])
        cost = (0, *(rng.randint(-bound, bound) for _ in range((1 << size) - 1)))
        problem = WeightedPartitionProblem(size, rng.randint(1, size), cost)
        if fast_partition_value(problem) != max_weighted_partition(problem)[0]:
            bad += 1
    ok = verdict("C10 fast partition value == DP", bad == 0, f"300 instances, {bad} mismatches")
    assert ok
