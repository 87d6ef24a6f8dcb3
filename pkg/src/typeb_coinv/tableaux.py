"""Q-fillings, P-fillings, weight sequences and skew-diagram reconstruction.

A t-diagonalizable module ``L_{c,d}(lambda)`` has a basis indexed by pairs
(P, Q): Q is a non-negative filling of lambda subject to integrality-triggered
bounds, P is a bijection onto 1..n subject to ordering constraints that Q
induces.  ``dim L_Q`` is the number of admissible P, i.e. the number of linear
extensions of the constraint DAG.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Callable, Iterator, Optional, Sequence

from .errors import ConstraintCycleError, ReconstructionError, SizeLimitError, UnboundedSearchError
from .exact import ParamScalar, as_integer, as_positive_integer, coset_rep, to_string
from .params import Params, charged_content, d_alt
from .shapes import (
    BBox,
    Bipartition,
    SkewComponent,
    SkewPair,
    SkewTableau,
    box_leq,
    canonical_form_with_tableau,
    enumerate_skew_shapes,
    is_admissible,
    is_connected,
    is_skew,
    matching_tableaux,
)


@dataclass(frozen=True)
class QFilling:
    shape: Bipartition
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.shape.size:
            raise ValueError("filling length does not match shape")
        idx = {b: i for i, b in enumerate(self.shape.boxes())}
        for b, v in zip(self.shape.boxes(), self.values):
            if v < 0:
                raise ValueError("Q takes non-negative values")
            for nb in (BBox(b.beta, b.row, b.col + 1), BBox(b.beta, b.row + 1, b.col)):
                if nb in idx and self.values[idx[nb]] < v:
                    raise ValueError(f"Q is not weakly increasing at {b}")

    def __getitem__(self, box: BBox) -> int:
        return self.values[self.shape.boxes().index(box)]

    def as_dict(self) -> dict[BBox, int]:
        return dict(zip(self.shape.boxes(), self.values))

    @property
    def total(self) -> int:
        return sum(self.values)

    def rows(self) -> list[list[list[int]]]:
        """Nested arrays per component, row-major."""
        it = iter(self.values)
        return [[[next(it) for _ in range(length)] for length in self.shape.part(beta)]
                for beta in (0, 1)]

    @classmethod
    def from_rows(cls, shape: Bipartition, rows0, rows1=()) -> "QFilling":
        vals = [v for row in rows0 for v in row] + [v for row in rows1 for v in row]
        return cls(shape, tuple(vals))

    def is_row_strict(self) -> bool:
        d = self.as_dict()
        return all(d[b] < d[BBox(b.beta, b.row, b.col + 1)]
                   for b in d if BBox(b.beta, b.row, b.col + 1) in d)

    def __str__(self):
        comps = []
        for rows in self.rows():
            comps.append(" / ".join(" ".join(map(str, r)) for r in rows) if rows else "∅")
        return " | ".join(comps)


@dataclass(frozen=True)
class PFilling:
    shape: Bipartition
    values: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.values) != list(range(1, self.shape.size + 1)):
            raise ValueError("P must be a bijection onto 1..n")

    def inverse(self) -> list[BBox]:
        """``inverse()[i-1]`` is the box labelled i."""
        out = [None] * len(self.values)
        for b, v in zip(self.shape.boxes(), self.values):
            out[v - 1] = b
        return out


@dataclass(frozen=True)
class PairBound:
    b: BBox
    b2: BBox
    kappa: int
    sign: int

    @property
    def parity(self) -> int:
        return self.kappa % 2


@dataclass(frozen=True)
class ConstraintSet:
    """``box_bounds[b] = k`` means Q(b) < k; a PairBound means Q(b) <= Q(b2) + kappa."""

    box_bounds: dict = field(default_factory=dict)
    pair_bounds: tuple = ()
    box_parity: dict = field(default_factory=dict)

    def __hash__(self):
        return hash((tuple(sorted(self.box_bounds.items())), self.pair_bounds))


def resolve_constraints(lam: Bipartition, p: Params) -> ConstraintSet:
    """Turn the integrality tests on charged contents into explicit bounds.

    The box condition ``k = ct_c(b) - d_{beta(b)-k}`` refers to k on both sides;
    splitting on the parity of k gives ``k = 2 ct(b) c`` (k even) and
    ``k = 2 d_beta + 2 ct(b) c`` (k odd).
    """
    if lam.size != p.n:
        raise ValueError(f"shape {lam} has size {lam.size}, parameters have n={p.n}")
    boxes = lam.boxes()
    box_bounds: dict = {}
    box_parity: dict = {}
    for b in boxes:
        even = 2 * b.content * p.c
        odd = 2 * d_alt(p, b.beta) + even
        for parity, cand in ((0, even), (1, odd)):
            k = as_positive_integer(cand)
            if k is not None and k % 2 == parity and k < box_bounds.get(b, k + 1):
                box_bounds[b] = k
                box_parity[b] = parity
    cc = {b: charged_content(p, b) for b in boxes}
    pairs = []
    for b in boxes:
        for b2 in boxes:
            if b == b2:
                continue
            for sign in (1, -1):
                k = as_positive_integer(cc[b] - cc[b2] + sign * 2 * p.c)
                if k is not None and (b.beta - k - b2.beta) % 2 == 0:
                    pairs.append(PairBound(b, b2, k, sign))
    return ConstraintSet(box_bounds, tuple(pairs), box_parity)


def _right(b: BBox) -> BBox:
    return BBox(b.beta, b.row, b.col + 1)


def _down(b: BBox) -> BBox:
    return BBox(b.beta, b.row + 1, b.col)


def upper_bounds(lam: Bipartition, cs: ConstraintSet) -> dict[BBox, int]:
    """Largest admissible value per box, propagated to a fixed point."""
    boxes = lam.boxes()
    inf = float("inf")
    ub = {b: (cs.box_bounds[b] - 1 if b in cs.box_bounds else inf) for b in boxes}
    changed = True
    while changed:
        changed = False
        for b in boxes:
            best = ub[b]
            for nb in (_right(b), _down(b)):
                if nb in ub:
                    best = min(best, ub[nb])
            for pb in cs.pair_bounds:
                if pb.b == b:
                    best = min(best, ub[pb.b2] + pb.kappa)
            if best < ub[b]:
                ub[b] = best
                changed = True
    for b in boxes:
        if ub[b] == inf:
            raise UnboundedSearchError(b)
    return {b: int(v) for b, v in ub.items()}


def iter_tab(
    lam: Bipartition,
    p: Params,
    cs: Optional[ConstraintSet] = None,
    *,
    parity: Optional[Callable[[BBox], int]] = None,
    row_strict: bool = False,
) -> Iterator[QFilling]:
    """Lazily yield Tab_{c,d}(lam) in lexicographic order.

    ``parity(b)`` restricts Q(b) to that residue mod 2; ``row_strict`` forbids
    equal neighbours along rows.  Both only prune, they never add fillings.
    """
    cs = cs or resolve_constraints(lam, p)
    boxes = lam.boxes()
    ub = upper_bounds(lam, cs)
    idx = {b: i for i, b in enumerate(boxes)}
    # pair bounds checked once both boxes are placed
    checks: list[list[PairBound]] = [[] for _ in boxes]
    for pb in cs.pair_bounds:
        checks[max(idx[pb.b], idx[pb.b2])].append(pb)
    vals = [0] * len(boxes)

    def rec(i):
        if i == len(boxes):
            yield QFilling(lam, tuple(vals))
            return
        b = boxes[i]
        lo = 0
        if b.col > 1:
            lo = vals[idx[BBox(b.beta, b.row, b.col - 1)]] + (1 if row_strict else 0)
        if b.row > 1:
            lo = max(lo, vals[idx[BBox(b.beta, b.row - 1, b.col)]])
        want = parity(b) % 2 if parity else None
        for v in range(lo, ub[b] + 1):
            if want is not None and v % 2 != want:
                continue
            vals[i] = v
            if all(vals[idx[pb.b]] <= vals[idx[pb.b2]] + pb.kappa for pb in checks[i]):
                yield from rec(i + 1)

    yield from rec(0)


def enumerate_tab(lam: Bipartition, p: Params, cs: Optional[ConstraintSet] = None, **kw) -> list[QFilling]:
    return list(iter_tab(lam, p, cs, **kw))


def is_generic(Q: QFilling, cs: ConstraintSet) -> bool:
    return all(Q[pb.b] < Q[pb.b2] + pb.kappa for pb in cs.pair_bounds)


# -- P-fillings ---------------------------------------------------------------------

@dataclass(frozen=True)
class PosetDAG:
    """Vertices are boxes; an edge (u, v) forces P(u) < P(v)."""

    nodes: tuple
    edges: frozenset

    def predecessors(self) -> list[int]:
        """Bitmask of required predecessors per vertex index."""
        idx = {b: i for i, b in enumerate(self.nodes)}
        masks = [0] * len(self.nodes)
        for u, v in self.edges:
            masks[idx[v]] |= 1 << idx[u]
        return masks


def p_dag(Q: QFilling, cs: ConstraintSet) -> PosetDAG:
    boxes = Q.shape.boxes()
    q = Q.as_dict()
    edges = set()
    for b in boxes:
        for b2 in boxes:
            if b != b2 and box_leq(b, b2) and q[b] == q[b2]:
                edges.add((b2, b))
    for pb in cs.pair_bounds:
        if q[pb.b] == q[pb.b2] + pb.kappa:
            edges.add((pb.b2, pb.b))
    ts = TopologicalSorter({b: [] for b in boxes})
    for u, v in edges:
        ts.add(v, u)
    try:
        ts.prepare()
    except CycleError as exc:
        raise ConstraintCycleError(f"cyclic P-constraints for Q = {Q}") from exc
    return PosetDAG(boxes, frozenset(edges))


LINEAR_EXTENSION_LIMIT = 20


def count_linear_extensions(g: PosetDAG) -> int:
    """Subset DP over order ideals: ways[S] counts orderings of S as an initial segment."""
    n = len(g.nodes)
    if n > LINEAR_EXTENSION_LIMIT:
        raise SizeLimitError(f"{n} vertices exceeds limit {LINEAR_EXTENSION_LIMIT}")
    pred = g.predecessors()
    ways = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for s, w in ways.items():
            for v in range(n):
                bit = 1 << v
                if not s & bit and pred[v] & s == pred[v]:
                    nxt[s | bit] = nxt.get(s | bit, 0) + w
        ways = nxt
    return ways.get((1 << n) - 1, 0)


def linear_extensions(g: PosetDAG) -> Iterator[PFilling]:
    """Every P compatible with ``g``, lexicographic in the box order."""
    n = len(g.nodes)
    pred = g.predecessors()
    order: list[int] = []

    def rec(s):
        if len(order) == n:
            vals = [0] * n
            for lab, v in enumerate(order, 1):
                vals[v] = lab
            yield tuple(vals)
            return
        for v in range(n):
            if not s >> v & 1 and pred[v] & s == pred[v]:
                order.append(v)
                yield from rec(s | 1 << v)
                order.pop()

    yield from rec(0)


def canonical_p(Q: QFilling, cs: ConstraintSet) -> PFilling:
    """The first linear extension in box order (smallest labels go to earliest boxes)."""
    g = p_dag(Q, cs)
    return PFilling(Q.shape, next(linear_extensions(g)))


def all_p(Q: QFilling, cs: ConstraintSet) -> Iterator[PFilling]:
    for vals in linear_extensions(p_dag(Q, cs)):
        yield PFilling(Q.shape, vals)


def dim_LQ(Q: QFilling, cs: ConstraintSet) -> int:
    return count_linear_extensions(p_dag(Q, cs))


# -- weights and diagrams -------------------------------------------------------------

@dataclass(frozen=True)
class WeightSeq:
    entries: tuple  # ((a, b), ...) with a a ParamScalar and b in {0, 1}

    def __len__(self):
        return len(self.entries)

    def contents(self, p: Params) -> list[tuple[ParamScalar, int]]:
        """``(a_i / 2c, b_i)`` for each i."""
        two_c = 2 * p.c
        return [(a / two_c, b) for a, b in self.entries]

    def to_json(self) -> list[dict]:
        return [{"a": to_string(a), "b": b} for a, b in self.entries]


def weight_sequence(P: PFilling, Q: QFilling, p: Params) -> WeightSeq:
    entries = []
    for b in P.inverse():
        q = Q[b]
        a = q + 1 - (d_alt(p, b.beta) - d_alt(p, b.beta - q - 1)) - 2 * b.content * p.c
        entries.append((a, (b.beta - q) % 2))
    return WeightSeq(tuple(entries))


def _build_component(labels_by_offset: dict[int, list[int]]) -> dict[int, tuple[int, int]]:
    """Place one run of consecutive diagonals; return label -> (row, col).

    On diagonals x and x+1 of a connected skew shape the labels alternate, and
    whichever diagonal holds the smaller first label fixes the vertical offset.
    """
    offs = sorted(labels_by_offset)
    top = {offs[0]: 0}
    for x in offs[1:]:
        lo, hi = labels_by_offset[x - 1], labels_by_offset[x]
        merged = sorted([(l, 0) for l in lo] + [(l, 1) for l in hi])
        tags = [t for _, t in merged]
        if any(a == b for a, b in zip(tags, tags[1:])):
            raise ReconstructionError(f"labels on diagonals {x - 1} and {x} do not interleave")
        top[x] = top[x - 1] - (1 if tags[0] == 1 else 0)
    out = {}
    for x in offs:
        for j, lab in enumerate(labels_by_offset[x]):
            r = top[x] + j
            out[lab] = (r, r + x)
    return out


def reconstruct_diagram(w: WeightSeq, p: Params) -> tuple[SkewPair, SkewTableau]:
    """The skew diagram and standard tableau realizing a weight sequence.

    Labels are grouped by component index and by content class modulo Z; within
    a class, maximal runs of consecutive contents are the connected components.
    The result is checked (skew, connected, standard) and returned canonically.
    """
    seq = w.contents(p)
    lists: tuple[list, list] = ([], [])
    mapping: dict = {}
    for which in (0, 1):
        groups: dict = {}
        for lab, (x, bb) in enumerate(seq, 1):
            if bb == which:
                groups.setdefault(coset_rep(x), []).append((lab, x))
        for rep in sorted(groups, key=ParamScalar.sort_key):
            by_off: dict[int, list[int]] = {}
            for lab, x in groups[rep]:
                by_off.setdefault(as_integer(x - rep), []).append(lab)
            offs = sorted(by_off)
            runs, cur = [], [offs[0]]
            for o in offs[1:]:
                if o == cur[-1] + 1:
                    cur.append(o)
                else:
                    runs.append(cur)
                    cur = [o]
            runs.append(cur)
            for run in runs:
                placed = _build_component({o: sorted(by_off[o]) for o in run})
                cells = set(placed.values())
                if len(cells) != len(placed) or not is_connected(cells) or not is_skew(cells):
                    raise ReconstructionError(f"contents {[str(rep + o) for o in run]} admit no skew shape")
                comp = SkewComponent(frozenset(cells), rep)
                i = len(lists[which])
                lists[which].append(comp)
                for lab, cell in placed.items():
                    mapping[(which, i, cell)] = lab
    d = SkewPair(tuple(lists[0]), tuple(lists[1]))
    t = SkewTableau.from_dict(d, mapping)
    if not t.is_standard():
        raise ReconstructionError("reconstructed filling is not standard")
    return canonical_form_with_tableau(d, t)


def diagram_of_Q(lam: Bipartition, Q: QFilling, p: Params, cs: Optional[ConstraintSet] = None) -> SkewPair:
    cs = cs or resolve_constraints(lam, p)
    P = canonical_p(Q, cs)
    return reconstruct_diagram(weight_sequence(P, Q, p), p)[0]


BRUTE_FORCE_LIMIT = 8


def brute_force_diagrams(w: WeightSeq, p: Params) -> list[tuple[SkewPair, SkewTableau]]:
    """Exhaustive search over skew shapes and standard tableaux for ``w``.

    Independent of :func:`reconstruct_diagram`: candidate shapes come from
    polyomino enumeration, kept only if admissible, then every standard
    tableau with the right content sequence is collected.
    """
    if len(w) > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"weight of length {len(w)} exceeds limit {BRUTE_FORCE_LIMIT}")
    seq = w.contents(p)
    cands = []
    for which in (0, 1):
        xs = [x for x, bb in seq if bb == which]
        opts = [c for c in enumerate_skew_shapes(xs) if is_admissible(c)] if xs else [()]
        cands.append(opts)
    found = []
    for c0 in cands[0]:
        for c1 in cands[1]:
            d = SkewPair(c0, c1)
            for t in matching_tableaux(d, seq):
                found.append(canonical_form_with_tableau(d, t))
    return found
