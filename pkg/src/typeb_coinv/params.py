"""Deformation parameters (c, d), charged contents, and the three scenario regimes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ParameterError
from .exact import TAU, ParamScalar, parse_scalar
from .shapes import BBox, check_partition, removable_boxes


@dataclass(frozen=True)
class Params:
    c: ParamScalar
    d: ParamScalar
    n: int

    def __post_init__(self):
        object.__setattr__(self, "c", ParamScalar.coerce(self.c))
        object.__setattr__(self, "d", ParamScalar.coerce(self.d))
        if self.c.is_zero():
            raise ParameterError("c must be nonzero")
        if self.n < 1:
            raise ParameterError("rank n must be positive")

    def __str__(self):
        return f"c={self.c}, d={self.d}, n={self.n}"


def d_alt(p: Params, i: int) -> ParamScalar:
    """d for even i, -d for odd i."""
    return p.d if i % 2 == 0 else -p.d


def charged_content(p: Params, b: BBox) -> ParamScalar:
    return d_alt(p, b.beta) + 2 * b.content * p.c


def gordon_params(n: int) -> Params:
    v = Fraction(2 * n + 1, 2 * n)
    p = Params(ParamScalar(v), ParamScalar(v), n)
    assert (2 * n + 1) - 2 * (p.d + (n - 1) * p.c) == 0
    return p


def rect_params(shape: Sequence[int], t: int, n: int | None = None) -> Params:
    """Generic c = t_formal with d solved from ``t = 2(d + ct(b) c)`` at the corner b."""
    shape = check_partition(shape)
    if len(set(shape)) != 1:
        raise ParameterError(f"shape {shape} is not a rectangle")
    if t <= 0 or t % 2 == 0:
        raise ParameterError("target t must be an odd positive integer")
    size = sum(shape)
    if n is not None and n != size:
        raise ParameterError(f"shape {shape} has {size} boxes, not n={n}")
    (b,) = removable_boxes(shape)
    return Params(TAU, Fraction(t, 2) - b.content * TAU, size)


def hook_params(n: int, k: int) -> Params:
    """Isolated parameters for the hook (k, 1^(n-k)): ``3 = 2d + 2 ct(b') c`` and ``2nc = 2k``."""
    if not 1 <= k <= n:
        raise ParameterError(f"arm length k={k} outside 1..{n}")
    if gcd(k, n) != 1:
        raise ParameterError(f"k={k} is not coprime to n={n}")
    m = n - k
    c = ParamScalar(Fraction(k, n))
    d = Fraction(3, 2) + m * c
    return Params(c, d, n)


def hook_k(n: int) -> int:
    if n < 2:
        raise ParameterError("hook_k needs n >= 2")
    if n % 4 == 0:
        return n // 2 + 1
    if n % 4 == 2:
        return n // 2 + 2
    return (n + 1) // 2


def parse_assignment(text: str) -> tuple[str, ParamScalar]:
    """``"c=3/5"`` -> ``("c", 3/5)``; ``"d=5/2-t"`` -> ``("d", 5/2 - t)``."""
    name, _, expr = text.partition("=")
    name = name.strip()
    if name not in ("c", "d") or not expr:
        raise ParameterError(f"expected c=<expr> or d=<expr>, got {text!r}")
    return name, parse_scalar(expr)
