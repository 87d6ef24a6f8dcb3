"""
Rectangular lowest weights at a generic parameter
=================================================

For the square (2,2) at c generic and d = 5/2 the module is of coinvariant type
and carries six copies of chi, one more than the Gordon module at n = 4.  The
3x3 rectangle does the same job at n = 6.
"""

from typeb_coinv import characters as ch
from typeb_coinv.tableaux import resolve_constraints

sc = ch.rect_scenario((2, 2), 5)
print(sc.label, sc.params)

# c stays a formal symbol t throughout; only the diagonal boxes are bounded
cs = resolve_constraints(sc.lam, sc.params)
print("box bounds:", {str(b): k for b, k in cs.box_bounds.items()}, "pair bounds:", len(cs.pair_bounds))

for sigma in (ch.DET, ch.CHI):
    for o in ch.linear_candidates(sc.lam, sigma, sc.params, cs):
        if o.occurs:
            print(f"  {sigma.name:4}", o.Q.rows()[0])

for shape, t in (((2, 2), 5), ((3, 3), 7)):
    r = ch.run_scenario(ch.rect_scenario(shape, t))
    print(f"{r.scenario}: chi {r.chi_mult_total}, eps_chi >= {r.eps_chi_lower}")
