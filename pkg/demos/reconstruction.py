"""
From a weight to a skew diagram
===============================

Each basis vector f_{P,Q} has a weight; dividing by 2c turns it into a content
sequence, which determines a pair of skew diagrams D^0, D^1 with a standard
tableau.  det occurs in L_Q exactly when D^1 is a vertical strip.
"""

from typeb_coinv import characters as ch
from typeb_coinv.shapes import is_vertical_strip
from typeb_coinv.tableaux import (
    QFilling,
    all_p,
    brute_force_diagrams,
    canonical_p,
    reconstruct_diagram,
    resolve_constraints,
    weight_sequence,
)

sc = ch.hook_scenario(5)
lam, p = sc.lam, sc.params
cs = resolve_constraints(lam, p)


def show(rows):
    Q = QFilling.from_rows(lam, rows)
    P = canonical_p(Q, cs)
    w = weight_sequence(P, Q, p)
    d, t = reconstruct_diagram(w, p)
    print("Q =", rows, "contents:", [str(x) for x, _ in w.contents(p)])
    for comp in d.d1:
        print("   D1 component at", comp.base_content, "rows", comp.rows())
    print("   vertical strip:", is_vertical_strip(d, 1))
    # the exhaustive search finds the same (and only this) diagram
    assert brute_force_diagrams(w, p) == [(d, t)]
    return Q


# the det filling: a three-cell column plus two single cells
show([[1, 3, 5], [1], [1]])

# the non-generic neighbour puts two cells in one row, whatever P is chosen
Q = show([[1, 3, 7], [1], [1]])
shapes = {reconstruct_diagram(weight_sequence(P, Q, p), p)[0] for P in all_p(Q, cs)}
print("distinct diagrams over all P:", len(shapes))
