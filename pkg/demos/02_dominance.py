"""
Comparing polynomials on the nonnegative axis
=============================================

``dominance`` decides exactly whether one polynomial stays above another
for every x >= 0.  When neither does, it returns two rational points where
the difference has opposite signs.
"""
from fractions import Fraction

from kindep import (
    IntPolynomial,
    compare_near_infinity,
    compare_near_zero,
    dominance,
    k_independence_polynomial,
    theorem6_pair,
)

f = IntPolynomial((1, 0, 1))   # 1 + x^2
g = IntPolynomial((0, 2))      # 2x
v = dominance(f, g)
print(f"{f}  vs  {g}:  {v}")   # touches at x = 1, never crosses

# Counting triangle-free vertex sets in two 7-vertex, 9-edge graphs.
G, H = theorem6_pair(3, 7)
pg, ph = k_independence_polynomial(G, 3), k_independence_polynomial(H, 3)
print("\nI_3(G) =", pg)
print("I_3(H) =", ph)
v = dominance(pg, ph)
print("verdict:", v)
print("near 0:", compare_near_zero(pg, ph).name,
      "  near infinity:", compare_near_infinity(pg, ph).name)

# The witnesses are exact and check out by direct evaluation.
for x in (v.x_lo, v.x_hi):
    print(f"  x = {x}:  I_3(G) - I_3(H) = {pg(x) - ph(x)}")

# A sweep of sample points, for a picture of where they cross.
print("\n   x      I_3(G)-I_3(H)")
for k in range(0, 13):
    x = Fraction(k, 4)
    print(f"{float(x):5.2f}   {float(pg(x) - ph(x)):10.3f}")
