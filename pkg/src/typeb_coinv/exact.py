"""Exact arithmetic in Q(t): rationals, univariate polynomials and rational functions.

Deformation parameters that are "generic" are modelled by a formal
transcendental ``t`` (written ``TAU`` here).  Every integrality question the
tableau combinatorics asks ("is this a positive integer?") is then decidable
by exact comparison.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Union

Rational = Fraction

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = [a if type(a) is Fraction else Fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Polynomial over Q, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def const(cls, a: Number) -> "UniPoly":
        return cls((a,))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        # coeffs already stripped Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(a) for a in self.coeffs]})"

    def __neg__(self):
        return UniPoly(-a for a in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    def scale(self, s: Number) -> "UniPoly":
        return UniPoly(a * s for a in self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.lead()
        if len(rem) - 1 < db:
            return UniPoly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lb
            quo[k] = q
            if q:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= q * y
        return UniPoly(quo), UniPoly(rem[:db])

    def monic(self) -> "UniPoly":
        return self.scale(1 / self.lead()) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


_ONE = UniPoly((1,))


class ParamScalar:
    """Element of Q(t), kept as a reduced fraction with monic denominator.

    Immutable.  ``0/0`` is rejected at construction.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[UniPoly, Number] = 0, den: Union[UniPoly, Number] = 1):
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num)
        if not isinstance(den, UniPoly):
            den = UniPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("ParamScalar with zero denominator")
        if num.is_zero():
            num, den = UniPoly(), _ONE
        elif den.is_constant():
            num, den = num.scale(1 / den.coeffs[0]), _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.lead()
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot interpret {x!r} as ParamScalar")

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_rational(self) -> bool:
        return self.den.degree == 0 and self.num.is_constant()

    def as_rational(self) -> Optional[Fraction]:
        return self.num.constant_term() if self.is_rational() else None

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational() and other.is_rational():
            return _from_fraction(self.num.constant_term() + other.num.constant_term())
        if self.den == other.den:
            return ParamScalar(self.num + other.num, self.den)
        return ParamScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(ParamScalar)
        out.num, out.den, out._hash = -self.num, self.den, None
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational() and other.is_rational():
            return _from_fraction(self.num.constant_term() * other.num.constant_term())
        return ParamScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return ParamScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return ParamScalar(1) / self ** (-e)
        return reduce(lambda a, b: a * b, [self] * e, ParamScalar(1))

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self) -> tuple:
        """Deterministic total order used for reproducible output (not a field order)."""
        return (self.den.degree, self.den.coeffs, self.num.degree, self.num.coeffs)

    def __repr__(self):
        return f"ParamScalar({to_string(self)!r})"

    def __str__(self):
        return to_string(self)


def _from_fraction(q: Fraction) -> ParamScalar:
    out = object.__new__(ParamScalar)
    out.num = UniPoly._raw((q,) if q else ())
    out.den = _ONE
    out._hash = None
    return out


def _coerce(x):
    if isinstance(x, ParamScalar):
        return x
    if isinstance(x, int):
        return _from_fraction(Fraction(x))
    if isinstance(x, Fraction):
        return _from_fraction(x)
    return NotImplemented


TAU = ParamScalar(UniPoly((0, 1)))


def as_integer(a: ParamScalar) -> Optional[int]:
    """The integer equal to ``a``, or None if ``a`` is not an integer."""
    q = a.as_rational()
    if q is None or q.denominator != 1:
        return None
    return q.numerator


def as_positive_integer(a: ParamScalar) -> Optional[int]:
    k = as_integer(a)
    return k if k is not None and k > 0 else None


def coset_rep(a: ParamScalar) -> ParamScalar:
    """Canonical representative of ``a + Z``.

    Writes ``a = q + r/den`` with ``deg r < deg den``; only the constant term
    of ``q`` moves under integer shifts, so it is reduced into [0, 1).
    """
    q, r = a.num.divmod(a.den)
    c0 = q.constant_term()
    shift = c0 - (c0.numerator // c0.denominator)
    coeffs = list(q.coeffs) or [Fraction(0)]
    coeffs[0] = shift
    return ParamScalar(UniPoly(coeffs) * a.den + r, a.den)


# -- serialization --------------------------------------------------------------

def _integer_form(p: UniPoly, scale: int) -> list[int]:
    return [int(c * scale) for c in p.coeffs]


def _poly_str(coeffs: list[int]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        a = coeffs[deg]
        if a == 0:
            continue
        mag = abs(a)
        if deg == 0:
            body = str(mag)
        else:
            var = "t" if deg == 1 else f"t^{deg}"
            body = var if mag == 1 else f"{mag}*{var}"
        sign = "-" if a < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def to_string(a: ParamScalar) -> str:
    """Serialize as ``p(t)/q(t)`` with integer coefficients; rationals as ``p/q``."""
    q = a.as_rational()
    if q is not None:
        return str(q)
    denoms = [c.denominator for c in a.num.coeffs + a.den.coeffs]
    scale = reduce(lcm, denoms, 1)
    num = _integer_form(a.num, scale)
    den = _integer_form(a.den, scale)
    g = reduce(gcd, num + den, 0)
    num = [x // g for x in num]
    den = [x // g for x in den]
    ns, ds = _poly_str(num), _poly_str(den)
    if len(num) > 1 and any(num[:-1]):
        ns = f"({ns})"
    if den == [1]:
        return ns
    if len(den) > 1 and (any(den[:-1]) or den[-1] != 1):
        ds = f"({ds})"
    return f"{ns}/{ds}"


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_scalar(text: str) -> ParamScalar:
    """Parse an arithmetic expression in ``t`` (or ``τ``) with rational constants."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return ParamScalar(node.value)
        if isinstance(node, ast.Name) and node.id in ("t", "tau"):
            return TAU
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                if isinstance(e, ast.Constant) and isinstance(e.value, int):
                    return ev(node.left) ** e.value
                raise ValueError("exponent must be an integer literal")
            if type(node.op) in _BINOPS:
                return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"unsupported expression element in {text!r}")

    # ^ would parse as xor, which binds looser than - and +
    src = text.strip().replace("τ", "t").replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    return ev(tree)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
