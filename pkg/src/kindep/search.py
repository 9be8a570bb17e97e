"""Exhaustive search of the class of graphs with ``n`` vertices and ``m``
edges, and the decision "does an optimally-greatest (least) graph exist?".

Labeled members are the ``m``-subsets of the edges of ``K_n`` taken in
``itertools.combinations`` order; a member's *rank* is its position in that
order.  Sweeps split the rank range into contiguous chunks, so the merged
result does not depend on the number of workers.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb
from typing import Iterable, Iterator

from .formats import graph6_encode
from .graph import Graph, cliques_of_rows
from .kindpoly import count_clique_free_subsets, k_independence_polynomial
from .polynomial import (
    Dominance,
    DominanceVerdict,
    IntPolynomial,
    dominance,
    eval_rational,
    nonneg_on_nonneg_axis,
)

DEFAULT_BUDGET = 10 ** 7
MEMBER_CAP = 4096


class BudgetExceeded(RuntimeError):
    pass


class Objective(enum.Enum):
    GREATEST = "greatest"
    LEAST = "least"


class Verdict(enum.Enum):
    EXISTS = "EXISTS"
    NOT_EXISTS = "NOT_EXISTS"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class ClassSpec:
    n: int
    m: int
    k: int = 2
    objective: Objective = Objective.GREATEST

    def __post_init__(self):
        if not 1 <= self.n <= 62:
            raise ValueError(f"n must be in 1..62, got {self.n}")
        if not 0 <= self.m <= comb(self.n, 2):
            raise ValueError(f"m must be in 0..{comb(self.n, 2)}, got {self.m}")
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if isinstance(self.objective, str):
            object.__setattr__(self, "objective", Objective(self.objective))

    @property
    def labeled_size(self) -> int:
        return class_size(self.n, self.m)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.k,
                "objective": self.objective.value}


def class_size(n: int, m: int) -> int:
    return comb(comb(n, 2), m)


# -- labeled enumeration ---------------------------------------------------
def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_rank(n: int, m: int, rank: int) -> Graph:
    pairs = _pairs(n)
    combo = next(islice(combinations(range(len(pairs)), m), rank, None))
    return _graph_from_combo(n, pairs, combo)


def _graph_from_combo(n: int, pairs, combo) -> Graph:
    rows = [0] * n
    for i in combo:
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def _check_budget(n: int, m: int, budget: int) -> int:
    size = class_size(n, m)
    if size > budget:
        raise BudgetExceeded(
            f"S({n},{m}) has {size} labeled graphs, budget is {budget}")
    return size


def enumerate_class(n: int, m: int, dedup: bool = False,
                    budget: int = DEFAULT_BUDGET) -> Iterator[Graph]:
    """Every labeled graph in the class, or one per isomorphism class."""
    _check_budget(n, m, budget)
    pairs = _pairs(n)
    seen: set[bytes] = set()
    for combo in combinations(range(len(pairs)), m):
        g = _graph_from_combo(n, pairs, combo)
        if dedup:
            key = g.canonical_form()
            if key in seen:
                continue
            seen.add(key)
        yield g


def _sweep_chunk(n: int, m: int, k: int, start: int, stop: int
                 ) -> dict[tuple[int, ...], tuple[int, list[int]]]:
    """Polynomial -> (count, first ranks) over ranks ``start..stop-1``."""
    pairs = _pairs(n)
    masks = [(1 << u) | (1 << v) for u, v in pairs]
    full = (1 << n) - 1
    out: dict[tuple[int, ...], list] = {}
    combos = islice(combinations(range(len(pairs)), m), start, stop)
    for rank, combo in enumerate(combos, start):
        if k == 2:
            cliques = [masks[i] for i in combo]
        else:
            rows = [0] * n
            for i in combo:
                u, v = pairs[i]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            cliques = cliques_of_rows(rows, full, k)
        key = tuple(count_clique_free_subsets(n, cliques))
        entry = out.get(key)
        if entry is None:
            out[key] = [1, [rank]]
        else:
            entry[0] += 1
            if len(entry[1]) < MEMBER_CAP:
                entry[1].append(rank)
    return {key: (c, ranks) for key, (c, ranks) in out.items()}


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    parts = max(1, jobs * 4) if jobs > 1 else 1
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)] or [(0, 0)]


@dataclass
class PolyGroup:
    """Class members sharing one polynomial; ``members`` keeps at most
    ``MEMBER_CAP`` of them, in enumeration order."""

    poly: IntPolynomial
    count: int
    members: list[Graph]
    complete: bool


def sweep_class(n: int, m: int, k: int, jobs: int = 1,
                budget: int = DEFAULT_BUDGET) -> tuple[list[PolyGroup], int]:
    """Group every labeled member of the class by ``I_k``.

    Returns the groups in order of first appearance and the number of
    labeled graphs swept.
    """
    total = _check_budget(n, m, budget)
    chunks = _chunks(total, jobs)
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_chunk, *zip(*[(n, m, k, a, b)
                                                        for a, b in chunks])))
    else:
        parts = [_sweep_chunk(n, m, k, a, b) for a, b in chunks]
    merged: dict[tuple[int, ...], list] = {}
    for part in parts:
        for key, (count, ranks) in part.items():
            entry = merged.get(key)
            if entry is None:
                merged[key] = [count, list(ranks)]
            else:
                entry[0] += count
                room = MEMBER_CAP - len(entry[1])
                entry[1].extend(ranks[:max(room, 0)])
    pairs = _pairs(n)
    wanted = sorted({r for _, ranks in merged.values() for r in ranks})
    decoded: dict[int, Graph] = {}
    it = combinations(range(len(pairs)), m)
    pos = 0
    for r in wanted:
        decoded[r] = _graph_from_combo(n, pairs, next(islice(it, r - pos, None)))
        pos = r + 1
    groups = [PolyGroup(IntPolynomial(key), count,
                        [decoded[r] for r in ranks], count <= MEMBER_CAP)
              for key, (count, ranks) in merged.items()]
    return groups, total


def group_graphs(graphs: Iterable[Graph], k: int) -> list[PolyGroup]:
    """Group explicitly given graphs (all members kept)."""
    merged: dict[IntPolynomial, PolyGroup] = {}
    for g in graphs:
        p = k_independence_polynomial(g, k)
        grp = merged.get(p)
        if grp is None:
            merged[p] = PolyGroup(p, 1, [g], True)
        else:
            grp.count += 1
            grp.members.append(g)
    return list(merged.values())


# -- optimality --------------------------------------------------------------
def _near_zero_key(p: IntPolynomial, length: int) -> tuple[int, ...]:
    return p.padded(length)


def _near_inf_key(p: IntPolynomial, length: int) -> tuple[int, ...]:
    return tuple(reversed(p.padded(length)))


def distinct_iso_classes(graphs: Iterable[Graph]) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        seen.setdefault(g.canonical_form(), g)
    return list(seen.values())


@dataclass
class OptimalityReport:
    spec: ClassSpec
    verdict: Verdict
    witness: Graph | None = None
    witness_poly: IntPolynomial | None = None
    cowitnesses: list[Graph] = field(default_factory=list)
    cowitnesses_complete: bool = True
    refutation: tuple[Graph, Graph] | None = None
    refutation_polys: tuple[IntPolynomial, IntPolynomial] | None = None
    crossing: DominanceVerdict | None = None
    class_size: int = 0
    dedup_count: int | None = None
    distinct_polynomials: int = 0
    source: str = "labeled"
    runtime: float | None = None
    message: str = ""
    polynomials: list[IntPolynomial] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        out: dict = {"spec": self.spec.to_dict(), "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = graph6_encode(self.witness)
            out["witness_polynomial"] = self.witness_poly.to_json()
            out["cowitnesses"] = [graph6_encode(g) for g in self.cowitnesses]
            out["cowitnesses_complete"] = self.cowitnesses_complete
        if self.refutation is not None:
            out["refutation"] = [graph6_encode(g) for g in self.refutation]
            out["refutation_polynomials"] = [p.to_json()
                                             for p in self.refutation_polys]
            out["crossing"] = self.crossing.to_dict()
        out["statistics"] = {
            "class_size": self.class_size,
            "dedup_count": self.dedup_count,
            "distinct_polynomials": self.distinct_polynomials,
            "source": self.source,
        }
        if self.runtime is not None:
            out["statistics"]["runtime_seconds"] = round(self.runtime, 3)
        if self.message:
            out["message"] = self.message
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    CSV_FIELDS = ("n", "m", "k", "objective", "verdict", "witness",
                  "refutation", "class_size", "runtime")

    def csv_row(self) -> dict:
        return {
            "n": self.spec.n, "m": self.spec.m, "k": self.spec.k,
            "objective": self.spec.objective.value,
            "verdict": self.verdict.value,
            "witness": graph6_encode(self.witness) if self.witness else "",
            "refutation": (" ".join(graph6_encode(g) for g in self.refutation)
                           if self.refutation else ""),
            "class_size": self.class_size,
            "runtime": "" if self.runtime is None else f"{self.runtime:.3f}",
        }

    def validate(self) -> list[str]:
        """Re-check the report's claims from scratch; returns problems."""
        problems = []
        k = self.spec.k
        greatest = self.spec.objective is Objective.GREATEST
        if self.verdict is Verdict.EXISTS:
            p = k_independence_polynomial(self.witness, k)
            if p != self.witness_poly:
                problems.append("witness polynomial does not recompute")
            for q in self.polynomials:
                d = p - q if greatest else q - p
                if not nonneg_on_nonneg_axis(d):
                    problems.append(f"witness fails against {q}")
                    break
        elif self.verdict is Verdict.NOT_EXISTS:
            a, b = self.refutation
            pa, pb = (k_independence_polynomial(a, k),
                      k_independence_polynomial(b, k))
            if (pa, pb) != tuple(self.refutation_polys):
                problems.append("refutation polynomials do not recompute")
            c = self.crossing
            if c is None or c.tag is not Dominance.CROSSES:
                problems.append("refutation lacks a crossing verdict")
            else:
                s1 = eval_rational(pa - pb, c.x_lo)
                s2 = eval_rational(pa - pb, c.x_hi)
                if not (s1 != 0 and s2 != 0 and (s1 > 0) != (s2 > 0)):
                    problems.append("crossing witnesses do not verify")
        return problems


def _decide(spec: ClassSpec, groups: list[PolyGroup]) -> OptimalityReport:
    greatest = spec.objective is Objective.GREATEST
    length = spec.n + 1
    pick = max if greatest else min
    near0 = pick(groups, key=lambda g: _near_zero_key(g.poly, length))
    near_inf = pick(groups, key=lambda g: _near_inf_key(g.poly, length))
    report = OptimalityReport(spec, Verdict.EXISTS,
                              distinct_polynomials=len(groups),
                              polynomials=[g.poly for g in groups])
    if near0 is not near_inf:
        report.verdict = Verdict.NOT_EXISTS
        report.refutation = (near0.members[0], near_inf.members[0])
        report.refutation_polys = (near0.poly, near_inf.poly)
        report.crossing = dominance(near0.poly, near_inf.poly)
        report.message = ("the class optimum near 0 and near infinity are "
                          "different polynomials")
        return report
    cand = near0
    for other in groups:
        if other is cand:
            continue
        d = cand.poly - other.poly if greatest else other.poly - cand.poly
        if not nonneg_on_nonneg_axis(d):
            report.verdict = Verdict.NOT_EXISTS
            report.refutation = (cand.members[0], other.members[0])
            report.refutation_polys = (cand.poly, other.poly)
            report.crossing = dominance(cand.poly, other.poly)
            report.message = ("the candidate optimal at both ends loses "
                              "somewhere in between")
            return report
    report.witness = cand.members[0]
    report.witness_poly = cand.poly
    report.cowitnesses = distinct_iso_classes(cand.members)
    report.cowitnesses_complete = cand.complete
    return report


def find_optimum(spec: ClassSpec, dedup: bool = False, jobs: int = 1,
                 budget: int = DEFAULT_BUDGET, timing: bool = False
                 ) -> OptimalityReport:
    """Decide whether the class has an optimally-greatest/least graph."""
    t0 = time.perf_counter()
    try:
        if dedup:
            reps = list(enumerate_class(spec.n, spec.m, dedup=True,
                                        budget=budget))
            groups = group_graphs(reps, spec.k)
            size, source = class_size(spec.n, spec.m), "dedup"
        else:
            groups, size = sweep_class(spec.n, spec.m, spec.k, jobs, budget)
            source = "labeled"
    except BudgetExceeded as exc:
        return OptimalityReport(spec, Verdict.BUDGET_EXCEEDED,
                                class_size=class_size(spec.n, spec.m),
                                message=str(exc))
    report = _decide(spec, groups)
    report.class_size = size
    report.source = source
    if dedup:
        report.dedup_count = len(reps)
    if timing:
        report.runtime = time.perf_counter() - t0
    return report


def find_optimum_in(graphs: Iterable[Graph], k: int = 2,
                    objective: Objective = Objective.GREATEST,
                    timing: bool = False) -> OptimalityReport:
    """Same decision over an explicit list of graphs (e.g. a graph6 file).

    All graphs must share order and size.
    """
    t0 = time.perf_counter()
    graphs = list(graphs)
    if not graphs:
        raise ValueError("no graphs given")
    n, m = graphs[0].n, graphs[0].m
    for g in graphs:
        if (g.n, g.m) != (n, m):
            raise ValueError(f"mixed classes: ({n},{m}) and ({g.n},{g.m})")
    spec = ClassSpec(n, m, k, objective)
    report = _decide(spec, group_graphs(graphs, k))
    report.class_size = len(graphs)
    report.source = "file"
    if timing:
        report.runtime = time.perf_counter() - t0
    return report


def reports_csv(reports: Iterable[OptimalityReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=OptimalityReport.CSV_FIELDS,
                            lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def explore_least(max_n: int, k: int = 2, budget: int = 10 ** 6,
                  jobs: int = 1) -> list[OptimalityReport]:
    """Search every class with ``n <= max_n`` for a missing optimally-least
    graph.  All-clear output is evidence at this scale, not a proof."""
    out = []
    for n in range(1, max_n + 1):
        for m in range(comb(n, 2) + 1):
            out.append(find_optimum(ClassSpec(n, m, k, Objective.LEAST),
                                    jobs=jobs, budget=budget))
    return out
