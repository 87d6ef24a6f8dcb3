"""Partitions, bipartitions, skew diagrams and standard tableaux on them.

Boxes of a bipartition are 1-indexed ``(row, col)`` inside component ``beta``.
Skew components are stored in their own coordinate frame (0-indexed cells)
together with ``base_content``, so a cell ``(r, c)`` has content
``base_content + (c - r)``.  Components living in different frames never
constrain one another, which is how diagonal slides are modelled.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import SizeLimitError
from .exact import ParamScalar, as_integer, coset_rep, parse_scalar, to_string

Cell = tuple[int, int]


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    return parts


@dataclass(frozen=True, order=True)
class BBox:
    beta: int
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def __str__(self):
        return f"({self.row},{self.col})" if self.beta == 0 else f"({self.row},{self.col})'"


def content(box) -> int:
    """Column minus row, for a BBox or a bare ``(row, col)`` cell."""
    if isinstance(box, BBox):
        return box.content
    r, c = box
    return c - r


@dataclass(frozen=True)
class Bipartition:
    p0: tuple[int, ...]
    p1: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p0", check_partition(self.p0))
        object.__setattr__(self, "p1", check_partition(self.p1))

    @property
    def size(self) -> int:
        return sum(self.p0) + sum(self.p1)

    def part(self, beta: int) -> tuple[int, ...]:
        return self.p1 if beta % 2 else self.p0

    def boxes(self) -> tuple[BBox, ...]:
        """All boxes, component 0 first, each component row-major."""
        return _boxes(self.p0, self.p1)

    def __contains__(self, box: BBox) -> bool:
        parts = self.part(box.beta)
        return 1 <= box.row <= len(parts) and 1 <= box.col <= parts[box.row - 1]

    def __str__(self):
        fmt = lambda p: "(" + ",".join(map(str, p)) + ")" if p else "∅"
        return f"({fmt(self.p0)}, {fmt(self.p1)})"


@lru_cache(maxsize=None)
def _boxes(p0, p1):
    return tuple(
        BBox(beta, r + 1, c + 1)
        for beta, parts in ((0, p0), (1, p1))
        for r, length in enumerate(parts)
        for c in range(length)
    )


def removable_boxes(parts: Sequence[int], beta: int = 0) -> list[BBox]:
    """Corners of a partition, ordered by decreasing content."""
    parts = check_partition(parts)
    out = [
        BBox(beta, i + 1, p)
        for i, p in enumerate(parts)
        if i + 1 == len(parts) or parts[i + 1] < p
    ]
    return sorted(out, key=lambda b: -b.content)


def box_leq(b: BBox, b2: BBox) -> bool:
    """Same component and ``b`` weakly above and to the left of ``b2``."""
    return b.beta == b2.beta and b.row <= b2.row and b.col <= b2.col


# -- skew components --------------------------------------------------------------

def is_skew(cells: Iterable[Cell]) -> bool:
    """Rectangle closure: NW and SE cells force everything between them."""
    cs = set(cells)
    for (a, b) in cs:
        for (a2, b2) in cs:
            if a2 >= a and b2 >= b:
                for i in range(a, a2 + 1):
                    for j in range(b, b2 + 1):
                        if (i, j) not in cs:
                            return False
    return True


def is_connected(cells: Iterable[Cell]) -> bool:
    cs = set(cells)
    if not cs:
        return True
    start = next(iter(cs))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def _normalize(cells: Iterable[Cell]) -> tuple[tuple[Cell, ...], int]:
    """Slide so that min content is 0 and min row is 0; return (cells, content shift)."""
    cells = list(cells)
    m = min(c - r for r, c in cells)
    cells = [(r, c - m) for r, c in cells]
    r0 = min(r for r, _ in cells)
    cells = [(r - r0, c - r0) for r, c in cells]
    return tuple(sorted(cells)), m


@dataclass(frozen=True)
class SkewComponent:
    cells: frozenset
    base_content: ParamScalar = field(default_factory=lambda: ParamScalar(0))

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(x) for x in self.cells))
        if not self.cells:
            raise ValueError("empty skew component")
        if not is_connected(self.cells):
            raise ValueError(f"cells are not connected: {sorted(self.cells)}")
        if not is_skew(self.cells):
            raise ValueError(f"cells are not a skew shape: {sorted(self.cells)}")

    @property
    def size(self) -> int:
        return len(self.cells)

    def content_of(self, cell: Cell) -> ParamScalar:
        r, c = cell
        return self.base_content + (c - r)

    def contents(self) -> list[ParamScalar]:
        return [self.content_of(x) for x in sorted(self.cells)]

    def slide(self, s: int) -> "SkewComponent":
        return SkewComponent(frozenset((r + s, c + s) for r, c in self.cells), self.base_content)

    def canonical(self) -> "SkewComponent":
        cells, m = _normalize(self.cells)
        return SkewComponent(frozenset(cells), self.base_content + m)

    def sort_key(self):
        return (coset_rep(self.base_content).sort_key(), self.base_content.sort_key(),
                self.size, tuple(sorted(self.cells)))

    def rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r, c in sorted(self.cells):
            out.setdefault(r, []).append(c)
        return out


@dataclass(frozen=True)
class SkewPair:
    d0: tuple[SkewComponent, ...] = ()
    d1: tuple[SkewComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d0", tuple(self.d0))
        object.__setattr__(self, "d1", tuple(self.d1))

    def components(self, which: int) -> tuple[SkewComponent, ...]:
        return self.d1 if which else self.d0

    @property
    def size(self) -> int:
        return sum(x.size for x in self.d0 + self.d1)

    def cells(self) -> list[tuple[int, int, Cell]]:
        """Every cell as ``(which, component index, cell)``."""
        return [
            (w, i, cell)
            for w in (0, 1)
            for i, comp in enumerate(self.components(w))
            for cell in sorted(comp.cells)
        ]

    def to_json(self) -> list[dict]:
        return [
            {"which": w, "base_content": to_string(comp.base_content),
             "cells": [list(x) for x in sorted(comp.cells)]}
            for w in (0, 1)
            for comp in self.components(w)
        ]

    @classmethod
    def from_json(cls, data) -> "SkewPair":
        if isinstance(data, str):
            data = json.loads(data)
        lists: tuple[list, list] = ([], [])
        for item in data:
            lists[item["which"]].append(
                SkewComponent(frozenset(tuple(x) for x in item["cells"]),
                              parse_scalar(item["base_content"])))
        return cls(tuple(lists[0]), tuple(lists[1]))


@dataclass(frozen=True)
class SkewTableau:
    """Standard filling of a SkewPair; ``entries`` maps (which, index, cell) to a label."""

    shape: SkewPair
    entries: tuple

    @classmethod
    def from_dict(cls, shape: SkewPair, mapping: dict) -> "SkewTableau":
        return cls(shape, tuple(sorted(mapping.items())))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def cell_of(self) -> dict[int, tuple]:
        return {lab: key for key, lab in self.entries}

    def content_sequence(self) -> list[tuple[ParamScalar, int]]:
        """``(content, which)`` of the cells labelled 1, 2, ..., n."""
        out = []
        inv = self.cell_of()
        for lab in range(1, len(self.entries) + 1):
            w, i, cell = inv[lab]
            out.append((self.shape.components(w)[i].content_of(cell), w))
        return out

    def is_standard(self) -> bool:
        m = self.as_dict()
        if sorted(m.values()) != list(range(1, len(m) + 1)):
            return False
        for (w, i, (r, c)), lab in m.items():
            for nb in ((r, c + 1), (r + 1, c)):
                other = m.get((w, i, nb))
                if other is not None and other <= lab:
                    return False
        return True


def is_vertical_strip(d: SkewPair, which: int) -> bool:
    """No two cells of one component of ``d^which`` share a row."""
    for comp in d.components(which):
        rows = [r for r, _ in comp.cells]
        if len(rows) != len(set(rows)):
            return False
    return True


def slide(d: SkewPair, shifts: Sequence[int]) -> SkewPair:
    """Slide every component diagonally; ``shifts`` lists d0's components then d1's."""
    it = iter(shifts)
    return SkewPair(tuple(c.slide(next(it)) for c in d.d0), tuple(c.slide(next(it)) for c in d.d1))


def canonical_form(d: SkewPair) -> SkewPair:
    return canonical_form_with_tableau(d)[0]


def canonical_form_with_tableau(d: SkewPair, t: SkewTableau | None = None):
    """Canonicalize ``d`` and carry tableau ``t`` (if given) along with it."""
    new_lists = []
    relabel: dict = {}
    for w in (0, 1):
        comps = d.components(w)
        canon = []
        for i, comp in enumerate(comps):
            cells, m = _normalize(comp.cells)
            # cell map: original -> normalized
            rmin = min(r for r, _ in comp.cells)
            cmap = {(r, c): (r - rmin, c - m - rmin) for r, c in comp.cells}
            canon.append((SkewComponent(frozenset(cells), comp.base_content + m), i, cmap))
        canon.sort(key=lambda x: x[0].sort_key())
        for new_i, (comp, old_i, cmap) in enumerate(canon):
            for old_cell, new_cell in cmap.items():
                relabel[(w, old_i, old_cell)] = (w, new_i, new_cell)
        new_lists.append(tuple(x[0] for x in canon))
    nd = SkewPair(*new_lists)
    if t is None:
        return nd, None
    return nd, SkewTableau.from_dict(nd, {relabel[k]: v for k, v in t.as_dict().items()})


def is_admissible(components: Sequence[SkewComponent]) -> bool:
    """Distinct components never carry contents differing by -1, 0 or 1.

    This is the separation needed for the induced module of the components to
    be simple; without it, a content sequence such as (x, x+1) would be realized
    both by a domino and by two singletons.
    """
    for i, a in enumerate(components):
        for b in components[i + 1:]:
            for x in set(a.contents()):
                for y in set(b.contents()):
                    k = as_integer(x - y)
                    if k is not None and abs(k) <= 1:
                        return False
    return True


# -- brute-force enumeration ------------------------------------------------------

SKEW_ENUM_LIMIT = 8
SYT_ENUM_LIMIT = 10


@lru_cache(maxsize=None)
def _fixed_polyominoes(size: int) -> frozenset:
    if size == 1:
        return frozenset({((0, 0),)})
    out = set()
    for poly in _fixed_polyominoes(size - 1):
        cs = set(poly)
        for r, c in poly:
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb not in cs:
                    new = cs | {nb}
                    r0 = min(x for x, _ in new)
                    c0 = min(y for _, y in new)
                    out.add(tuple(sorted((x - r0, y - c0) for x, y in new)))
    return frozenset(out)


@lru_cache(maxsize=None)
def connected_skew_shapes(size: int) -> dict:
    """Connected skew shapes of a given size, keyed by content multiset (min content 0)."""
    index: dict = {}
    seen = set()
    for poly in _fixed_polyominoes(size):
        if not is_skew(poly):
            continue
        cells, _ = _normalize(poly)
        if cells in seen:
            continue
        seen.add(cells)
        key = tuple(sorted(c - r for r, c in cells))
        index.setdefault(key, []).append(cells)
    return index


def _coset_partitions(offsets: Counter) -> Iterator[tuple]:
    """Split a multiset of integers into content multisets of connected skew shapes."""
    if not offsets:
        yield ()
        return
    x0 = min(offsets)
    total = sum(offsets.values())
    for size in range(1, total + 1):
        for key, shapes in connected_skew_shapes(size).items():
            need = Counter(x0 + k for k in key)
            if all(offsets[v] >= m for v, m in need.items()):
                rest = offsets - need
                for tail in _coset_partitions(rest):
                    for cells in shapes:
                        yield ((x0, cells),) + tail


def enumerate_skew_shapes(contents: Sequence[ParamScalar]) -> list[tuple[SkewComponent, ...]]:
    """All collections of connected skew components whose contents make up ``contents``.

    Components are returned in canonical form; collections are deduplicated and
    sorted.  No admissibility filter is applied.
    """
    if len(contents) > SKEW_ENUM_LIMIT:
        raise SizeLimitError(f"{len(contents)} contents exceeds limit {SKEW_ENUM_LIMIT}")
    by_coset: dict = {}
    for x in contents:
        by_coset.setdefault(coset_rep(x), []).append(x)
    per_coset = []
    for rep, xs in sorted(by_coset.items(), key=lambda kv: kv[0].sort_key()):
        offsets = Counter(as_integer(x - rep) for x in xs)
        options = set()
        for parts in _coset_partitions(offsets):
            comps = tuple(sorted(
                (SkewComponent(frozenset(cells), rep + x0).canonical() for x0, cells in parts),
                key=SkewComponent.sort_key))
            options.add(comps)
        per_coset.append(sorted(options, key=lambda cs: [c.sort_key() for c in cs]))
    out = []
    for combo in product(*per_coset):
        comps = tuple(sorted((c for part in combo for c in part), key=SkewComponent.sort_key))
        out.append(comps)
    return out


def _addable(d: SkewPair, filled: dict) -> list[tuple]:
    out = []
    for key in d.cells():
        if key in filled:
            continue
        w, i, (r, c) = key
        comp = d.components(w)[i]
        left, up = (r, c - 1), (r - 1, c)
        if (left not in comp.cells or (w, i, left) in filled) and \
                (up not in comp.cells or (w, i, up) in filled):
            out.append(key)
    return out


def enumerate_standard_tableaux(d: SkewPair) -> list[SkewTableau]:
    if d.size > SYT_ENUM_LIMIT:
        raise SizeLimitError(f"{d.size} cells exceeds limit {SYT_ENUM_LIMIT}")
    out = []
    filled: dict = {}

    def rec(label):
        if label > d.size:
            out.append(SkewTableau.from_dict(d, filled))
            return
        for key in _addable(d, filled):
            filled[key] = label
            rec(label + 1)
            del filled[key]

    rec(1)
    return out


def matching_tableaux(d: SkewPair, sequence: Sequence[tuple[ParamScalar, int]]) -> list[SkewTableau]:
    """Standard tableaux of ``d`` whose ``(content, which)`` sequence equals ``sequence``.

    Same result as filtering :func:`enumerate_standard_tableaux`, pruned as it goes.
    """
    if d.size != len(sequence):
        return []
    out = []
    filled: dict = {}

    def rec(label):
        if label > d.size:
            out.append(SkewTableau.from_dict(d, filled))
            return
        x, w = sequence[label - 1]
        for key in _addable(d, filled):
            kw, i, cell = key
            if kw == w and d.components(kw)[i].content_of(cell) == x:
                filled[key] = label
                rec(label + 1)
                del filled[key]

    rec(1)
    return out
