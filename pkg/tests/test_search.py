from __future__ import annotations

import csv
import io
import json
import random
from math import comb

import pytest

from kindep.constructions import lex_graph, theorem4_graph, theorem6_pair
from kindep.graph import (
    complete_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)
from kindep.kindpoly import k_independence_polynomial
from kindep.polynomial import (
    Dominance,
    IntPolynomial,
    dominance,
    nonneg_on_nonneg_axis,
)
from kindep.search import (
    ClassSpec,
    Objective,
    Verdict,
    class_size,
    enumerate_class,
    explore_least,
    find_optimum,
    find_optimum_in,
    graph_from_rank,
    reports_csv,
    sweep_class,
)


def test_class_spec_validation():
    assert ClassSpec(4, 2, objective="least").objective is Objective.LEAST
    for bad in [(0, 0), (4, 7), (4, 2, 1)]:
        with pytest.raises(ValueError):
            ClassSpec(*bad)


def test_enumerate_examples():
    assert len(list(enumerate_class(4, 2))) == 15
    reps = list(enumerate_class(4, 2, dedup=True))
    assert len(reps) == 2
    p3k1 = disjoint_union(path_graph(3), empty_graph(1))
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert {g.canonical_form() for g in reps} == {
        p3k1.canonical_form(), two_k2.canonical_form()}
    assert list(enumerate_class(3, 3)) == [complete_graph(3)]
    assert list(enumerate_class(4, 0)) == [empty_graph(4)]


def test_dedup_counts_match_known_sequence():
    # graphs on 5 vertices by edge count (OEIS A008406)
    counts = [len(list(enumerate_class(5, m, dedup=True)))
              for m in range(11)]
    assert counts == [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]


def test_graph_from_rank_order():
    graphs = list(enumerate_class(5, 3))
    for r in (0, 7, len(graphs) - 1):
        assert graph_from_rank(5, 3, r) == graphs[r]


def test_sweep_groups_cover_class():
    groups, total = sweep_class(5, 4, 2)
    assert total == class_size(5, 4) == sum(g.count for g in groups)
    for grp in groups:
        for g in grp.members:
            assert k_independence_polynomial(g, 2) == grp.poly


def test_parallel_sweep_matches_serial():
    a, _ = sweep_class(6, 5, 3, jobs=1)
    b, _ = sweep_class(6, 5, 3, jobs=2)
    assert {g.poly: g.count for g in a} == {g.poly: g.count for g in b}


def test_find_optimum_examples():
    r = find_optimum(ClassSpec(4, 2, 2, Objective.GREATEST))
    assert r.verdict is Verdict.EXISTS
    assert any(g.is_isomorphic(lex_graph(4, 2)) for g in r.cowitnesses)
    r = find_optimum(ClassSpec(4, 2, 2, Objective.LEAST))
    assert r.verdict is Verdict.EXISTS
    assert r.witness.is_isomorphic(theorem4_graph(4, 2))
    assert r.validate() == []


def test_budget():
    r = find_optimum(ClassSpec(8, 14), budget=1000)
    assert r.verdict is Verdict.BUDGET_EXCEEDED
    assert r.class_size == comb(28, 14)
    assert r.validate() == []


def test_dedup_does_not_change_verdicts():
    for objective in Objective:
        for k in (2, 3):
            spec = ClassSpec(5, 4, k, objective)
            a, b = find_optimum(spec), find_optimum(spec, dedup=True)
            assert a.verdict == b.verdict
            assert a.witness_poly == b.witness_poly
            assert b.dedup_count == 6


def test_exists_witness_beats_random_members():
    rng = random.Random(4)
    spec = ClassSpec(6, 7, 2, Objective.LEAST)
    r = find_optimum(spec)
    assert r.verdict is Verdict.EXISTS
    members = list(enumerate_class(6, 7))
    for g in rng.sample(members, 100):
        d = k_independence_polynomial(g, 2) - r.witness_poly
        assert nonneg_on_nonneg_axis(d)


def test_no_small_class_lacks_an_optimum():
    # every class of order <= 5 has both optima for k = 2..4
    for k in (2, 3, 4):
        for objective in Objective:
            for m in range(11):
                r = find_optimum(ClassSpec(5, m, k, objective))
                assert r.verdict is Verdict.EXISTS and r.validate() == []


def test_not_exists_refutation_reverifies():
    g, h = theorem6_pair(3, 7)
    r = find_optimum_in([g, h, g.relabel([6, 5, 4, 3, 2, 1, 0])], 3,
                        Objective.LEAST)
    assert r.verdict is Verdict.NOT_EXISTS and r.validate() == []
    assert r.crossing.tag is Dominance.CROSSES
    a, b = r.refutation_polys
    assert (a - b)(r.crossing.x_lo) * (a - b)(r.crossing.x_hi) < 0
    r.crossing = dominance(a, a)
    assert r.validate()


def test_tampered_report_fails_validation():
    r = find_optimum(ClassSpec(5, 3, 2, Objective.LEAST))
    r.witness_poly = IntPolynomial((1, 5, 7))
    assert r.validate()


def test_find_optimum_in_file_source():
    graphs = list(enumerate_class(5, 3, dedup=True))
    r = find_optimum_in(graphs, 2, Objective.GREATEST)
    assert r.verdict is Verdict.EXISTS and r.source == "file"
    with pytest.raises(ValueError):
        find_optimum_in([path_graph(3), path_graph(4)])


def test_report_serialisation_is_deterministic():
    spec = ClassSpec(5, 4, 3, Objective.GREATEST)
    a, b = find_optimum(spec), find_optimum(spec)
    assert a.to_json() == b.to_json()
    assert reports_csv([a]) == reports_csv([b])
    data = json.loads(a.to_json())
    assert data["spec"] == {"n": 5, "m": 4, "k": 3, "objective": "greatest"}
    assert all(isinstance(c, str) for c in data["witness_polynomial"])
    rows = list(csv.DictReader(io.StringIO(reports_csv([a]))))
    assert rows[0]["verdict"] == a.verdict.value and rows[0]["runtime"] == ""
    timed = find_optimum(spec, timing=True)
    assert timed.runtime is not None


def test_explore_least_small():
    reports = explore_least(5)
    assert len(reports) == sum(comb(n, 2) + 1 for n in range(1, 6))
    assert all(r.verdict is Verdict.EXISTS for r in reports)
