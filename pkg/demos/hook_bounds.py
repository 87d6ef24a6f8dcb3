"""
Hook lowest weights and the eps_chi table
=========================================

For n other than 4 and 6 the best module found is a hook (k, 1^m) at the
isolated parameters 2nc = 2k and 3 = 2d + 2 ct(b') c.  Its generic chi count is
2 + km, so 2 + km - (n+1) bounds eps_chi from below.
"""

from typeb_coinv import characters as ch

sc = ch.hook_scenario(5)
print(sc.label, sc.params)
r = ch.run_scenario(sc)
print("det:", r.det_mult, "chi (generic):", r.chi_mult_generic, "eps_chi >=", r.eps_chi_lower)

# the computed bound against the closed form, rank by rank
print(f"{'n':>3} {'scenario':>20} {'computed':>9} {'stated':>7}")
for r in ch.bounds_table(range(4, 17), workers=2):
    print(f"{r.n:>3} {r.scenario:>20} {r.eps_chi_lower:>9} {r.theorem_bound:>7}")

# for n = 2 mod 4 the computation beats the closed form: (n-6)(n+2)/4 vs n(n-6)/4
