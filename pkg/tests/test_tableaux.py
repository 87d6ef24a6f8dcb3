from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial, prod

import pytest
from hypothesis import given, strategies as st

from typeb_coinv import characters as ch
from typeb_coinv.errors import ReconstructionError, SizeLimitError
from typeb_coinv.exact import ParamScalar
from typeb_coinv.params import Params, gordon_params, hook_params, rect_params
from typeb_coinv.shapes import BBox, Bipartition, is_vertical_strip
from typeb_coinv.tableaux import (
    PFilling,
    PosetDAG,
    QFilling,
    all_p,
    brute_force_diagrams,
    canonical_p,
    count_linear_extensions,
    diagram_of_Q,
    dim_LQ,
    enumerate_tab,
    is_generic,
    linear_extensions,
    p_dag,
    reconstruct_diagram,
    resolve_constraints,
    weight_sequence,
)

F = Fraction
HOOK5 = Bipartition((3, 1, 1))
B, B2 = BBox(0, 1, 3), BBox(0, 3, 1)


def gordon(n):
    return Bipartition((n,)), gordon_params(n)


def test_gordon_constraints():
    lam, p = gordon(4)
    cs = resolve_constraints(lam, p)
    assert cs.box_bounds == {BBox(0, 1, 4): 9}
    assert cs.pair_bounds == ()


def test_hook_constraints():
    cs = resolve_constraints(HOOK5, hook_params(5, 3))
    assert cs.box_bounds == {B2: 3}
    assert [(pb.b, pb.b2, pb.kappa) for pb in cs.pair_bounds] == [(B, B2, 6)]


def test_rectangle_constraints():
    lam = Bipartition((2, 2))
    cs = resolve_constraints(lam, rect_params((2, 2), 5))
    assert cs.box_bounds == {BBox(0, 1, 1): 5, BBox(0, 2, 2): 5}
    assert cs.pair_bounds == ()


def test_gordon_tab_is_all_multisets():
    lam, p = gordon(4)
    tab = enumerate_tab(lam, p)
    assert len(tab) == comb(12, 4) == 495
    assert {Q.values for Q in tab} == set(combinations_with_replacement(range(9), 4))


def _weakly_increasing(lam, Q):
    return all(Q.get(BBox(b.beta, b.row, b.col + 1), 99) >= v and Q.get(BBox(b.beta, b.row + 1, b.col), 99) >= v
               for b, v in Q.items())


def test_hook_tab_by_exhaustion():
    lam = HOOK5
    boxes = lam.boxes()
    expected = set()
    for vals in product(range(10), repeat=len(boxes)):
        Q = dict(zip(boxes, vals))
        if _weakly_increasing(lam, Q) and Q[B2] <= 2 and Q[B] <= Q[B2] + 6:
            expected.add(vals)
    assert {Q.values for Q in enumerate_tab(lam, hook_params(5, 3))} == expected


def test_rectangle_tab_by_exhaustion():
    lam = Bipartition((2, 2))
    boxes = lam.boxes()
    expected = {vals for vals in product(range(8), repeat=4)
                if _weakly_increasing(lam, dict(zip(boxes, vals))) and vals[0] <= 4 and vals[3] <= 4}
    assert {Q.values for Q in enumerate_tab(lam, rect_params((2, 2), 5))} == expected


def test_genericity():
    cs = resolve_constraints(HOOK5, hook_params(5, 3))
    assert not is_generic(QFilling.from_rows(HOOK5, [[1, 3, 7], [1], [1]]), cs)
    assert is_generic(QFilling.from_rows(HOOK5, [[0, 2, 4], [0], [0]]), cs)
    rect = Bipartition((2, 2))
    rcs = resolve_constraints(rect, rect_params((2, 2), 5))
    assert all(is_generic(Q, rcs) for Q in enumerate_tab(rect, rect_params((2, 2), 5)))


def test_p_dag_edges():
    lam, p = gordon(4)
    cs = resolve_constraints(lam, p)
    assert p_dag(QFilling(lam, (0, 1, 2, 3)), cs).edges == frozenset()
    g = p_dag(QFilling(lam, (2, 2, 2, 2)), cs)
    assert count_linear_extensions(g) == 1
    hcs = resolve_constraints(HOOK5, hook_params(5, 3))
    g = p_dag(QFilling.from_rows(HOOK5, [[1, 3, 7], [1], [1]]), hcs)
    assert (B2, B) in g.edges


def _le_oracle(n, edges):
    return sum(all(perm[u] < perm[v] for u, v in edges) for perm in permutations(range(n)))


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] < e[1]), max_size=8))))
def test_linear_extensions_against_permutations(case):
    n, edges = case
    g = PosetDAG(tuple(range(n)), frozenset(edges))
    assert count_linear_extensions(g) == _le_oracle(n, edges)
    assert len(set(linear_extensions(g))) == count_linear_extensions(g)


def test_linear_extension_edge_cases():
    assert count_linear_extensions(PosetDAG(tuple(range(5)), frozenset())) == factorial(5)
    chain = frozenset((i, i + 1) for i in range(4))
    assert count_linear_extensions(PosetDAG(tuple(range(5)), chain)) == 1
    with pytest.raises(SizeLimitError):
        count_linear_extensions(PosetDAG(tuple(range(21)), frozenset()))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gordon_dimension_identity(n):
    lam, p = gordon(n)
    cs = resolve_constraints(lam, p)
    total = 0
    for Q in enumerate_tab(lam, p, cs):
        mult = Counter(Q.values)
        assert dim_LQ(Q, cs) == factorial(n) // prod(factorial(m) for m in mult.values())
        total += dim_LQ(Q, cs)
    assert total == (2 * n + 1) ** n


def test_det_filling_weights_all_in_second_component():
    lam, p = gordon(4)
    cs = resolve_constraints(lam, p)
    Q = QFilling(lam, (1, 3, 5, 7))
    for P in all_p(Q, cs):
        assert all(b == 1 for _, b in weight_sequence(P, Q, p).entries)


def test_hook_det_weight_contents():
    p = hook_params(5, 3)
    cs = resolve_constraints(HOOK5, p)
    Q = QFilling.from_rows(HOOK5, [[1, 3, 5], [1], [1]])
    w = weight_sequence(canonical_p(Q, cs), Q, p)
    assert Counter(w.contents(p)) == Counter((ParamScalar(F(x, 3)), 1) for x in (5, 8, 11, 7, 9))


def test_zero_entry_weight_formula():
    p = hook_params(5, 3)
    lam = HOOK5
    cs = resolve_constraints(lam, p)
    Q = QFilling.from_rows(lam, [[0, 0, 0], [0], [0]])
    P = canonical_p(Q, cs)
    for b, (a, bit) in zip(P.inverse(), weight_sequence(P, Q, p).entries):
        assert a == 1 - 2 * p.d - 2 * b.content * p.c
        assert bit == 0


def test_hook_det_diagram_is_vertical_strip():
    p = hook_params(5, 3)
    Q = QFilling.from_rows(HOOK5, [[1, 3, 5], [1], [1]])
    d = diagram_of_Q(HOOK5, Q, p)
    assert d.d0 == ()
    assert sorted(c.size for c in d.d1) == [1, 1, 3]
    assert is_vertical_strip(d, 1)


def test_hook_nongeneric_diagram_has_row_pair():
    p = hook_params(5, 3)
    cs = resolve_constraints(HOOK5, p)
    Q = QFilling.from_rows(HOOK5, [[1, 3, 7], [1], [1]])
    shapes = set()
    for P in all_p(Q, cs):
        d, _ = reconstruct_diagram(weight_sequence(P, Q, p), p)
        shapes.add(d)
        assert not is_vertical_strip(d, 1)
        rows = [{comp.content_of(x) for x in comp.cells if x[0] == r}
                for comp in d.d1 for r in comp.rows()]
        assert {ParamScalar(F(11, 3)), ParamScalar(F(14, 3))} in rows
    assert len(shapes) == 1


def test_specific_p_for_nongeneric_hook():
    p = hook_params(5, 3)
    cs = resolve_constraints(HOOK5, p)
    Q = QFilling.from_rows(HOOK5, [[1, 3, 7], [1], [1]])
    Ps = [P for P in all_p(Q, cs) if P.values[HOOK5.boxes().index(B)] == 5
          and P.values[HOOK5.boxes().index(B2)] == 1]
    assert Ps
    d, _ = reconstruct_diagram(weight_sequence(Ps[0], Q, p), p)
    assert not is_vertical_strip(d, 1)


def test_trivial_rank_one():
    lam = Bipartition((1,))
    p = gordon_params(1)
    Q = QFilling(lam, (0,))
    d, t = reconstruct_diagram(weight_sequence(PFilling(lam, (1,)), Q, p), p)
    assert d.size == 1 and list(t.as_dict().values()) == [1]


def test_gordon_two_det_diagram():
    lam, p = gordon(2)
    d = diagram_of_Q(lam, QFilling(lam, (1, 3)), p)
    assert d.d0 == () and sum(c.size for c in d.d1) == 2
    assert is_vertical_strip(d, 1)


def test_rectangle_det_diagram():
    lam = Bipartition((2, 2))
    p = rect_params((2, 2), 5)
    d = diagram_of_Q(lam, QFilling(lam, (1, 3, 1, 3)), p)
    assert d.d0 == () and is_vertical_strip(d, 1)


def _check_oracle(lam, p, Qs, every_p=False):
    cs = resolve_constraints(lam, p)
    for Q in Qs:
        for P in (all_p(Q, cs) if every_p else [canonical_p(Q, cs)]):
            w = weight_sequence(P, Q, p)
            assert brute_force_diagrams(w, p) == [reconstruct_diagram(w, p)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reconstruction_matches_brute_force_gordon(n):
    lam, p = gordon(n)
    _check_oracle(lam, p, enumerate_tab(lam, p), every_p=True)


def test_reconstruction_matches_brute_force_hook():
    p = hook_params(5, 3)
    _check_oracle(HOOK5, p, enumerate_tab(HOOK5, p))


def test_reconstruction_matches_brute_force_rectangle():
    lam = Bipartition((2, 2))
    p = rect_params((2, 2), 5)
    _check_oracle(lam, p, enumerate_tab(lam, p))


def test_mixed_bipartition_reconstruction():
    # both components bounded through the odd test: 2d + 2c = 1 and -2d + 2c = 5
    lam = Bipartition((2,), (2,))
    p = Params(F(3, 2), -1, 4)
    tab = enumerate_tab(lam, p)
    assert len(tab) == 15
    _check_oracle(lam, p, tab, every_p=True)
    both = [Q for Q in tab if all(diagram_of_Q(lam, Q, p).components(w) for w in (0, 1))]
    assert both


def test_integer_parameter_outside_diagonalizable_range():
    lam = Bipartition((2,), (1,))
    p = Params(1, F(-3, 2), 3)
    cs = resolve_constraints(lam, p)
    Q = QFilling(lam, (0, 0, 1))
    P = PFilling(lam, (2, 1, 3))
    w = weight_sequence(P, Q, p)
    assert brute_force_diagrams(w, p) == []
    with pytest.raises(ReconstructionError):
        reconstruct_diagram(w, p)


@pytest.mark.parametrize("n", range(4, 8))
def test_diagram_is_independent_of_p(n):
    sc = ch.scenario_for(n)
    cs = resolve_constraints(sc.lam, sc.params)
    for sigma in (ch.DET, ch.CHI):
        for occ in ch.linear_candidates(sc.lam, sigma, sc.params, cs):
            if occ.generic:
                continue
            ds = {reconstruct_diagram(weight_sequence(P, occ.Q, sc.params), sc.params)[0]
                  for P in all_p(occ.Q, cs)}
            assert len(ds) == 1
