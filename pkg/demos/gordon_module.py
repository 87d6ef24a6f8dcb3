"""
The Gordon module and the (2n+1)^n count
========================================

At c = d = (2n+1)/2n the module L(triv) of the one-row shape (n) has a basis
indexed by pairs (P, Q).  Summing the number of P for each Q recovers Gordon's
lower bound (2n+1)^n, and the det and chi fillings can be read off directly.
"""

from typeb_coinv import characters as ch
from typeb_coinv.tableaux import dim_LQ, enumerate_tab, resolve_constraints

n = 4
sc = ch.gordon_scenario(n)
print("parameters:", sc.params)

# the only constraint is a bound on the last box
cs = resolve_constraints(sc.lam, sc.params)
print("box bounds:", {str(b): k for b, k in cs.box_bounds.items()})

# Q runs over weakly increasing fillings with entries in 0..2n
tab = enumerate_tab(sc.lam, sc.params, cs)
print("number of Q:", len(tab))

# each Q contributes one basis vector per compatible P
total = sum(dim_LQ(Q, cs) for Q in tab)
print("sum of dim L_Q:", total, "=", f"{2 * n + 1}^{n}")

# det comes from the odd strictly increasing filling, chi from the even ones
for sigma in (ch.DET, ch.CHI):
    occ = [o.Q for o in ch.linear_candidates(sc.lam, sigma, sc.params, cs) if o.occurs]
    print(sigma.name, [Q.values for Q in occ])
