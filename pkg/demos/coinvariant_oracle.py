"""
Brute-force diagonal coinvariants for small rank
================================================

The quotient of Q[x, y] by the invariants of positive degree is computed one
bidegree at a time with exact integer elimination.  For n <= 3 the dimension
turns out to be exactly (2n+1)^n, and the chi' part sits where the Gordon
module predicts.
"""

import warnings

from typeb_coinv import characters as ch
from typeb_coinv.oracle import epsilon_report, quotient_hilbert

for n in (1, 2):
    rep = quotient_hilbert(n)
    print(f"n={n}: dims by degree", [v["quotient_dim"] for v in rep.per_degree.values()])
    print("   ", epsilon_report(n, rep))

# chi' by Euler degree (x counts +1, y counts -1) next to the module's chi
rep = quotient_hilbert(2)
sc = ch.gordon_scenario(2)
print("chi' in R_W:", {d: v["isotypic"]["chi_prime"] for d, v in rep.euler().items() if v["isotypic"]["chi_prime"]})
print("chi in L   :", dict(ch.graded_linear_character(sc.lam, ch.CHI, sc.params)))

# n = 3 takes several seconds
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    print("n=3:", epsilon_report(3))
