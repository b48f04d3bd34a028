"""Feasibility of small bounded integer programs.

Search is depth first with interval propagation at every node. Two
branching strategies share that machinery:

* ``"dfs"``: variables in index order, values low to high. Simple and
  deterministic, but it can wander when the instance is infeasible and the
  domains are wide.
* ``"lp"``: solve the LP relaxation at each node (HiGHS through scipy),
  prune if it is empty, and branch on a fractional variable.

The default ``"auto"`` runs ``"dfs"`` under a small node allowance first
and switches to ``"lp"`` if that runs out. Every strategy is exhaustive, so
all of them return the same verdict.

Lazy cuts: once a full assignment satisfies the static rows, the
``lazy_cuts`` callback may return extra rows it violates. They are added to
the pool for the rest of the solve and the search continues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import BudgetExceeded

LE, EQ, GE = "<=", "=", ">="
RELATIONS = (LE, EQ, GE)

DEFAULT_BUDGET = 200_000
DFS_PROBE = 150  # nodes the plain search gets before "auto" brings in the LP

Assignment = tuple  # one int per variable

Coeffs = Union[Sequence[int], Mapping[int, int]]


@dataclass(frozen=True)
class Row:
    """One linear constraint ``sum(coef[t] * x[idx[t]]) rel rhs`` (sparse)."""

    idx: tuple[int, ...]
    coef: tuple[int, ...]
    rel: str
    rhs: int

    def activity(self, x: Sequence[int]) -> int:
        return sum(a * x[j] for j, a in zip(self.idx, self.coef))

    def holds(self, x: Sequence[int]) -> bool:
        act = self.activity(x)
        if self.rel == LE:
            return act <= self.rhs
        if self.rel == GE:
            return act >= self.rhs
        return act == self.rhs


def make_row(coeffs: Coeffs, rel: str, rhs: int, p: int | None = None) -> Row:
    """Build a row from a dense vector (length ``p``) or a ``{var: coef}`` map."""
    if rel not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}, got {rel!r}")
    if isinstance(coeffs, Mapping):
        items = sorted((int(j), int(a)) for j, a in coeffs.items() if a)
        if p is not None and any(not 0 <= j < p for j, _ in items):
            raise ValueError("coefficient index out of range")
    else:
        coeffs = list(coeffs)
        if p is not None and len(coeffs) != p:
            raise ValueError(f"coefficient vector has length {len(coeffs)}, expected {p}")
        items = [(j, int(a)) for j, a in enumerate(coeffs) if a]
    if rhs != int(rhs):
        raise ValueError("right-hand sides must be integers")
    return Row(tuple(j for j, _ in items), tuple(a for _, a in items), rel, int(rhs))


@dataclass
class IlpInstance:
    p: int
    lower: list
    upper: list
    rows: list = field(default_factory=list)
    lazy_cuts: Callable[[Assignment], Iterable[Row]] | None = None
    names: list | None = None

    def __post_init__(self):
        if len(self.lower) != self.p or len(self.upper) != self.p:
            raise ValueError("need one lower and one upper bound per variable")
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo is None or hi is None or not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"variable {j} is unbounded; every variable needs finite bounds")
        self.lower = [int(v) for v in self.lower]
        self.upper = [int(v) for v in self.upper]
        self.rows = [r if isinstance(r, Row) else make_row(*r, p=self.p) for r in self.rows]

    def add(self, coeffs: Coeffs, rel: str, rhs: int) -> Row:
        row = make_row(coeffs, rel, rhs, self.p)
        self.rows.append(row)
        return row

    def name(self, j: int) -> str:
        return self.names[j] if self.names else f"x{j}"

    def check(self, x: Sequence[int]) -> bool:
        """Bounds and static rows only; lazy cuts are not consulted."""
        if len(x) != self.p:
            return False
        if any(not lo <= v <= hi for v, lo, hi in zip(x, self.lower, self.upper)):
            return False
        return all(r.holds(x) for r in self.rows)

    def to_lp_text(self) -> str:
        """Plain listing for eyeballing an instance while debugging."""
        out = ["feasibility", "subject to"]
        for t, r in enumerate(self.rows):
            terms = " ".join(f"{'+' if a >= 0 else '-'} {abs(a)} {self.name(j)}" for j, a in zip(r.idx, r.coef))
            out.append(f"  c{t}: {terms or '0'} {r.rel} {r.rhs}")
        out.append("bounds")
        for j in range(self.p):
            out.append(f"  {self.lower[j]} <= {self.name(j)} <= {self.upper[j]}")
        out.append("general")
        out.append("  " + " ".join(self.name(j) for j in range(self.p)))
        out.append("end")
        return "\n".join(out) + "\n"


# -- propagation ---------------------------------------------------------------

def _propagate(rows: Sequence[Row], lo: list, hi: list, rounds: int = 64) -> bool:
    """Tighten ``lo``/``hi`` in place; False once some row cannot be met."""
    for _ in range(rounds):
        changed = False
        for r in rows:
            mn = mx = 0
            for j, a in zip(r.idx, r.coef):
                if a > 0:
                    mn += a * lo[j]
                    mx += a * hi[j]
                else:
                    mn += a * hi[j]
                    mx += a * lo[j]
            if r.rel != GE:
                slack = r.rhs - mn
                if slack < 0:
                    return False
                if slack < mx - mn:  # otherwise nothing can tighten
                    for j, a in zip(r.idx, r.coef):
                        if a > 0:
                            cap = lo[j] + slack // a
                            if cap < hi[j]:
                                hi[j] = cap
                                changed = True
                        else:
                            floor = hi[j] - slack // -a
                            if floor > lo[j]:
                                lo[j] = floor
                                changed = True
            if r.rel != LE:
                slack = mx - r.rhs
                if slack < 0:
                    return False
                if slack < mx - mn:
                    for j, a in zip(r.idx, r.coef):
                        if a > 0:
                            floor = hi[j] - slack // a
                            if floor > lo[j]:
                                lo[j] = floor
                                changed = True
                        else:
                            cap = lo[j] + slack // -a
                            if cap < hi[j]:
                                hi[j] = cap
                                changed = True
        if not changed:
            return True
    # not at fixpoint yet, but every bound so far is valid
    return True


# -- search --------------------------------------------------------------------

class _Search:
    def __init__(self, inst: IlpInstance, budget: int):
        self.inst = inst
        self.rows = list(inst.rows)
        self.budget = budget
        self.nodes = 0
        self.cuts: list[Row] = []

    def tick(self, allowance: int | None = None) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"ILP search exceeded its budget of {self.budget} nodes")
        return allowance is None or self.nodes <= allowance

    def leaf(self, x: tuple) -> bool:
        """True if ``x`` survives separation; otherwise records the new cuts."""
        if not all(r.holds(x) for r in self.rows):
            return False
        if self.inst.lazy_cuts is None:
            return True
        fresh = [c if isinstance(c, Row) else make_row(*c, p=self.inst.p) for c in self.inst.lazy_cuts(x)]
        fresh = [c for c in fresh if not c.holds(x)]
        if not fresh:
            return True
        self.cuts.extend(fresh)
        self.rows.extend(fresh)
        return False

    def dfs(self, lo: list, hi: list, allowance: int | None = None):
        """Index-order, low-to-high search. Returns an assignment, None, or
        ``...`` when the allowance ran out first."""
        stack = [(lo, hi)]
        while stack:
            lo, hi = stack.pop()
            if not self.tick(allowance):
                return ...
            if not _propagate(self.rows, lo, hi):
                continue
            j = next((j for j in range(len(lo)) if lo[j] < hi[j]), None)
            if j is None:
                x = tuple(lo)
                if self.leaf(x):
                    return x
                continue
            # x_j = lo[j] first, then x_j in [lo[j]+1, hi[j]]
            up_lo, up_hi = lo[:], hi[:]
            up_lo[j] += 1
            hi[j] = lo[j]
            stack.append((up_lo, up_hi))
            stack.append((lo, hi))
        return None

    def lp(self, lo: list, hi: list):
        from scipy.optimize import linprog

        p = self.inst.p
        stack = [(lo, hi)]
        while stack:
            lo, hi = stack.pop()
            self.tick()
            if not _propagate(self.rows, lo, hi):
                continue
            free = [j for j in range(p) if lo[j] < hi[j]]
            if not free:
                x = tuple(lo)
                if self.leaf(x):
                    return x
                continue
            sol = _relaxation(linprog, self.rows, lo, hi, p)
            if sol is None:
                continue
            frac = [(abs(v - round(v)), j) for j, v in enumerate(sol) if lo[j] < hi[j]]
            worst, j = max(frac, default=(0.0, -1))
            if worst <= 1e-6:
                x = tuple(int(round(v)) for v in sol)
                if all(l <= v <= h for v, l, h in zip(x, lo, hi)) and all(r.holds(x) for r in self.rows):
                    if self.leaf(x):
                        return x
                    stack.append((lo, hi))  # new cuts: solve this node again
                    continue
                # rounding drifted; split the first free domain in half
                j = free[0]
                split = (lo[j] + hi[j]) // 2
            else:
                split = math.floor(sol[j])
            up_lo, up_hi = lo[:], hi[:]
            up_lo[j] = split + 1
            hi[j] = split
            stack.append((up_lo, up_hi))
            stack.append((lo, hi))
        return None


def _relaxation(linprog, rows: Sequence[Row], lo: list, hi: list, p: int):
    ub_rows = [r for r in rows if r.rel != EQ]
    eq_rows = [r for r in rows if r.rel == EQ]

    def dense(rs, sign):
        mat = np.zeros((len(rs), p))
        rhs = np.zeros(len(rs))
        for t, r in enumerate(rs):
            s = sign(r)
            for j, a in zip(r.idx, r.coef):
                mat[t, j] = s * a
            rhs[t] = s * r.rhs
        return mat, rhs

    a_ub, b_ub = dense(ub_rows, lambda r: 1 if r.rel == LE else -1)
    a_eq, b_eq = dense(eq_rows, lambda r: 1)
    res = linprog(
        np.ones(p),
        A_ub=a_ub if ub_rows else None,
        b_ub=b_ub if ub_rows else None,
        A_eq=a_eq if eq_rows else None,
        b_eq=b_eq if eq_rows else None,
        bounds=list(zip(lo, hi)),
        method="highs",
    )
    if res.status == 2:
        return None
    if res.status != 0:
        # numerical trouble; let branching decide instead of guessing
        return [lo[j] + 0.5 if lo[j] < hi[j] else lo[j] for j in range(p)]
    return [float(v) for v in res.x]


def feasible(inst: IlpInstance, budget: int = DEFAULT_BUDGET, strategy: str = "auto"):
    """An integer point meeting every row and every lazy cut, or None.

    Raises :class:`BudgetExceeded` when more than ``budget`` search nodes are
    needed. ``strategy`` is ``"auto"``, ``"dfs"`` or ``"lp"``.
    """
    if strategy not in ("auto", "dfs", "lp"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if any(l > h for l, h in zip(inst.lower, inst.upper)):
        return None
    search = _Search(inst, budget)
    if strategy == "dfs":
        return search.dfs(inst.lower[:], inst.upper[:])
    if strategy == "auto":
        found = search.dfs(inst.lower[:], inst.upper[:], allowance=DFS_PROBE)
        if found is not ...:
            return found
    return search.lp(inst.lower[:], inst.upper[:])

