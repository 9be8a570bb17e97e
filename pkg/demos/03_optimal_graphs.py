"""
Uniformly optimal graphs in a class
===================================

S(n, m) is every labeled graph with n vertices and m edges.  A graph is
optimally greatest (least) when its polynomial is >= (<=) every other one in
the class at every x >= 0.  ``find_optimum`` enumerates the class and
settles the question exactly.
"""
from math import comb

from kindep import (
    ClassSpec,
    Objective,
    find_optimum,
    graph6_encode,
    lex_graph,
    theorem4_graph,
)

n = 6
print(f"optimally greatest graphs for n = {n}")
for m in range(comb(n, 2) + 1):
    r = find_optimum(ClassSpec(n, m, 2, Objective.GREATEST))
    lex_ok = any(w.is_isomorphic(lex_graph(n, m)) for w in r.cowitnesses)
    print(f"  m={m:2}  {r.verdict.value:10} {graph6_encode(r.witness):6} "
          f"lex graph among witnesses: {lex_ok}")

print(f"\noptimally least graphs with few edges, n = {n}")
for m in range(n // 2 + 1):
    r = find_optimum(ClassSpec(n, m, 2, Objective.LEAST))
    matching = theorem4_graph(n, m)
    print(f"  m={m}  {r.witness_poly}   matching plus isolated vertices: "
          f"{any(w.is_isomorphic(matching) for w in r.cowitnesses)}")

# Reports are plain data and re-check themselves from scratch.
r = find_optimum(ClassSpec(6, 8, 2, Objective.LEAST), dedup=True)
print("\nS(6,8) least:", r.verdict.value, "| validate() ->", r.validate())
print(r.to_json())
