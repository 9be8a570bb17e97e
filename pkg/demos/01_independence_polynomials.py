"""
Independence polynomials of small graphs
========================================

The coefficient of x^j counts independent vertex sets of size j.
"""
from kindep import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    independence_polynomial,
    independence_polynomial_oracle,
    lex_graph,
    lex_polynomial_closed,
    path_graph,
)

# A few shapes everybody knows.
for name, g in [("K_5", complete_graph(5)),
                ("5K_1", empty_graph(5)),
                ("P_4", path_graph(4)),
                ("C_5", cycle_graph(5))]:
    print(f"{name:5} I = {independence_polynomial(g)}")

# Disjoint unions multiply.
two_p3 = disjoint_union(path_graph(3), path_graph(3))
print("\nI(P_3)^2        =", independence_polynomial(path_graph(3)) ** 2)
print("I(P_3 u P_3)    =", independence_polynomial(two_p3))

# The recursive engine and the brute-force subset count always agree.
g = cycle_graph(12)
assert independence_polynomial(g) == independence_polynomial_oracle(g)
print("\nI(C_12) =", independence_polynomial(g))

# Taking the m lexicographically first edges gives a graph whose polynomial
# has a closed form.
print("\nlex graphs on 6 vertices")
for m in range(0, 16, 3):
    p = lex_polynomial_closed(6, m)
    assert p == independence_polynomial(lex_graph(6, m))
    print(f"  m={m:2}  {p}")
