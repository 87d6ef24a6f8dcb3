"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see the summary lines.
"""
import time
from contextlib import nullcontext

import pytest

from typeb_coinv import characters as ch
from typeb_coinv.characters import CHI, DET
from typeb_coinv.oracle import epsilon_report, quotient_hilbert
from typeb_coinv.params import hook_k
from typeb_coinv.shapes import is_vertical_strip
from typeb_coinv.tableaux import (
    brute_force_diagrams,
    canonical_p,
    count_linear_extensions,
    diagram_of_Q,
    enumerate_tab,
    p_dag,
    reconstruct_diagram,
    resolve_constraints,
    weight_sequence,
)


def report(capsys, number, title, ok, detail, elapsed=None, limit=None):
    timing = f" [{elapsed:.1f}s" + (f" / limit {limit}s]" if limit else "]") if elapsed is not None else ""
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number}: {status}  {title}: {detail}{timing}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _fillings(sc, sigma):
    cs = resolve_constraints(sc.lam, sc.params)
    return [o.Q for o in ch.linear_candidates(sc.lam, sigma, sc.params, cs) if o.occurs]


def check_1(capsys=None):
    t = time.time()
    rows, ok = [], True
    for n in (2, 3, 4):
        sc = ch.gordon_scenario(n)
        cs = resolve_constraints(sc.lam, sc.params)
        dim = sum(count_linear_extensions(p_dag(Q, cs)) for Q in enumerate_tab(sc.lam, sc.params, cs))
        det = ch.multiplicity_linear(sc.lam, DET, sc.params, cs)[1]
        chi = ch.multiplicity_linear(sc.lam, CHI, sc.params, cs)[1]
        ok &= dim == (2 * n + 1) ** n and det == 1 and chi == n + 1
        rows.append(f"n={n} dim={dim} det={det} chi={chi}")
    el = time.time() - t
    return report(capsys, 1, "Gordon identities", ok and el < 60, "; ".join(rows), el, 60)


DISPLAYED_CHI_FILLINGS = {
    ((0, 2), (0, 2)), ((0, 2), (0, 4)), ((0, 4), (0, 4)),
    ((0, 2), (2, 4)), ((0, 4), (2, 4)), ((2, 4), (2, 4)),
}


def check_2(capsys=None):
    sc = ch.rect_scenario((2, 2), 5)
    det = {tuple(map(tuple, Q.rows()[0])) for Q in _fillings(sc, DET)}
    chi = {tuple(map(tuple, Q.rows()[0])) for Q in _fillings(sc, CHI)}
    eps = ch.run_scenario(sc).eps_chi_lower
    ok = det == {((1, 3), (1, 3))} and chi == DISPLAYED_CHI_FILLINGS and eps == 1
    return report(capsys, 2, "rectangle (2,2), t=5", ok, f"det={sorted(det)} chi count={len(chi)} eps_chi>={eps}")


def check_3(capsys=None):
    r = ch.run_scenario(ch.rect_scenario((3, 3), 7))
    ok = r.det_mult == 1 and r.chi_mult_total == 10 and r.eps_chi_lower == 3
    return report(capsys, 3, "rectangle (3,3), t=7", ok,
                  f"det={r.det_mult} chi={r.chi_mult_total} eps_chi>={r.eps_chi_lower}")


def check_4(capsys=None):
    t = time.time()
    bad = []
    for n in range(4, 17):
        sc = ch.hook_scenario(n)
        k, m = sc.detail["k"], sc.detail["m"]
        assert k == hook_k(n)
        r = ch.run_scenario(sc, strict=False)
        stated = ch.theorem_bound(n, overrides=False)
        computed = 2 + k * m - (n + 1)
        good = (r.det_mult == 1 and r.chi_mult_generic == 2 + k * m and r.eps_chi_lower == computed
                and computed >= stated and (computed == stated or n % 4 == 2))
        if not good:
            bad.append(n)
    el = time.time() - t
    ok = not bad and el < 300
    return report(capsys, 4, "hooks 4..16", ok, f"failures at n={bad}" if bad else "det=1, chi_generic=2+km, bound holds", el, 300)


def check_5(capsys=None):
    checked, bad = 0, []
    for n in range(5, 13):
        sc = ch.hook_scenario(n)
        k = sc.detail["k"]
        cs = resolve_constraints(sc.lam, sc.params)
        (pb,) = cs.pair_bounds
        for occ in ch.linear_candidates(sc.lam, DET, sc.params, cs):
            Q = occ.Q
            if Q[pb.b] != Q[pb.b2] + 2 * k:
                continue
            checked += 1
            if is_vertical_strip(diagram_of_Q(sc.lam, Q, sc.params, cs), 1):
                bad.append((n, Q.values))
    ok = checked > 0 and not bad
    return report(capsys, 5, "same-row certificate", ok, f"{checked} fillings checked, {len(bad)} strips")


def _weights_for_criterion_6():
    """Canonical-P weights of every filling the criteria 1-5 computations touch, n <= 7."""
    scenarios = [(ch.gordon_scenario(n), True) for n in (2, 3, 4)]
    scenarios += [(ch.rect_scenario((2, 2), 5), False)]
    scenarios += [(ch.hook_scenario(n), False) for n in range(4, 8)]
    for sc, whole_tab in scenarios:
        cs = resolve_constraints(sc.lam, sc.params)
        if whole_tab:
            Qs = enumerate_tab(sc.lam, sc.params, cs)
        else:
            Qs = [o.Q for s in (DET, CHI) for o in ch.linear_candidates(sc.lam, s, sc.params, cs)]
        for Q in Qs:
            yield sc, weight_sequence(canonical_p(Q, cs), Q, sc.params)


def check_6(capsys=None):
    t = time.time()
    total, bad = 0, 0
    for sc, w in _weights_for_criterion_6():
        total += 1
        if brute_force_diagrams(w, sc.params) != [reconstruct_diagram(w, sc.params)]:
            bad += 1
    el = time.time() - t
    ok = total > 0 and bad == 0 and el < 600
    return report(capsys, 6, "reconstruction vs brute force", ok, f"{total} weight sequences, {bad} mismatches", el, 600)


def check_7(capsys=None):
    e = epsilon_report(1)
    ok = e["dim"] == 3 and e["epsilon"] == 0 and e["det_dim"] == 2
    return report(capsys, 7, "oracle n=1", ok, f"dim={e['dim']} eps={e['epsilon']} det={e['det_dim']}")


def check_8(capsys=None):
    t = time.time()
    rep = quotient_hilbert(2)
    e = epsilon_report(2, rep)
    sc = ch.gordon_scenario(2)
    graded = ch.graded_linear_character(sc.lam, CHI, sc.params)
    euler = rep.euler()
    dominated = all(euler[d]["isotypic"]["chi_prime"] >= m for d, m in graded.items())
    el = time.time() - t
    ok = e["dim"] >= 25 and e["chi_prime_dim"] >= 3 and dominated and el < 600
    return report(capsys, 8, "oracle n=2", ok,
                  f"dim={e['dim']} chi'={e['chi_prime_dim']} graded dominance={dominated}", el, 600)


def check_9(capsys=None):
    # Equality dim R_W(B_4) = 6562 needs the n=4 sweep, which is out of reach.
    # What is certified: Gordon gives 6561 and the rectangle module adds a chi copy.
    with pytest.raises(ValueError):
        quotient_hilbert(4)
    sc = ch.gordon_scenario(4)
    cs = resolve_constraints(sc.lam, sc.params)
    gordon_dim = sum(count_linear_extensions(p_dag(Q, cs)) for Q in enumerate_tab(sc.lam, sc.params, cs))
    lower = gordon_dim + ch.eps_chi_bound(4).eps_chi_lower
    with capsys.disabled() if capsys else nullcontext():
        print(f"\ncriterion 9: NOT REPRODUCIBLE  dim R_W(B_4) = 6562 is not computed; "
              f"certified lower bound {lower}")
    return lower == 6562


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, capsys):
    assert globals()[f"check_{number}"](capsys)


def test_criterion_9_lower_bound_only(capsys):
    assert check_9(capsys)


if __name__ == "__main__":
    for i in range(1, 10):
        globals()[f"check_{i}"]()
