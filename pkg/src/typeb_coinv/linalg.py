"""Fraction-free incremental row echelon form over the integers.

Rows are sparse dicts ``{column: int}``.  Each stored row has a distinct pivot
(its smallest column).  Elimination cross-multiplies instead of dividing and
then strips the row content, so entries stay integral and small.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping


def primitive(row: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, row.values(), 0)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    if row and row[min(row)] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def integral(row: Mapping[int, Fraction | int]) -> dict[int, int]:
    """Clear denominators of a rational row (same span)."""
    den = reduce(lcm, (Fraction(v).denominator for v in row.values()), 1)
    return primitive({k: int(Fraction(v) * den) for k, v in row.items() if v})


class Echelon:
    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Mapping[int, int]) -> dict[int, int]:
        v = {k: x for k, x in row.items() if x}
        while v:
            piv = min(v)
            base = self.rows.get(piv)
            if base is None:
                break
            a, b = base[piv], v[piv]
            # v <- a*v - b*base eliminates the pivot column
            out = {k: a * x for k, x in v.items()}
            for k, x in base.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = primitive(out)
        return v

    def add(self, row: Mapping[int, int]) -> bool:
        """Insert ``row``; True if it enlarged the span."""
        v = self.reduce(row)
        if not v:
            return False
        self.rows[min(v)] = primitive(v)
        return True

    def extend(self, rows: Iterable[Mapping[int, int]]) -> int:
        return sum(self.add(r) for r in rows)


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    e = Echelon()
    e.extend(rows)
    return e.rank
