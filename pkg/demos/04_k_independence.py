"""
Clique-free subsets and a class with no least graph
===================================================

I_k counts vertex subsets that induce no k-clique (k = 2 gives the usual
independence polynomial).  For k = 3 the class S(7, 9) has no optimally
least member: two graphs swap order between small and large x.
"""
import time

from kindep import (
    ClassSpec,
    Objective,
    find_optimum,
    graph6_encode,
    k_independence_polynomial,
    r_value,
    theorem5_pair,
)

# Greatest side: two graphs on 13 vertices with 72 edges each.
G, H = theorem5_pair(3, 3, 13)
for name, g in (("G", G), ("H", H)):
    print(f"{name}: m={g.m}  triangles={len(g.k_cliques(3))}  "
          f"r={r_value(g, 3)}  I_3 = {k_independence_polynomial(g, 3)}")

# Least side: sweep all 293,930 labeled graphs of S(7,9).
t0 = time.perf_counter()
r = find_optimum(ClassSpec(7, 9, 3, Objective.LEAST))
print(f"\nS(7,9), k=3, least: {r.verdict.value} "
      f"({r.class_size} graphs, {r.distinct_polynomials} distinct "
      f"polynomials, {time.perf_counter() - t0:.1f}s)")
for g, p in zip(r.refutation, r.refutation_polys):
    print(f"  {graph6_encode(g)}: {p}")
print(" ", r.crossing)
