"""Brute-force diagonal coinvariants of W(B_n) by exact linear algebra.

R = Q[x_1..x_n, y_1..y_n] with W(B_n) acting by simultaneous signed
permutations.  The ideal I_W is generated by invariants of positive degree;
everything is bihomogeneous, so each bidegree (a, b) is handled separately:

    I_(a,b) = sum_i x_i I_(a-1,b) + sum_i y_i I_(a,b-1) + Inv_(a,b)

and Inv_(a,b) is spanned by Reynolds images of the monomials of that bidegree.
The quotient is generated in degree 1, so the first total degree whose
quotient piece vanishes ends the sweep.
"""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional

from .characters import CHI_PRIME, DET, LINEAR_CHARS, LinearChar
from .errors import OracleError
from .linalg import Echelon, integral

Exponents = tuple[int, ...]
PolyQ = dict  # Exponents -> Fraction


@dataclass(frozen=True)
class SignedPerm:
    """x_i -> signs[i] * x_{perm[i]} (0-indexed), and likewise for y."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "SignedPerm":
        p = list(range(n))
        p[i], p[j] = p[j], p[i]
        return cls(tuple(p), (1,) * n)

    @classmethod
    def sign_change(cls, n: int, i: int) -> "SignedPerm":
        s = [1] * n
        s[i] = -1
        return cls(tuple(range(n)), tuple(s))

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: (self * other) acts as ``other`` first."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def perm_parity(self) -> int:
        seen, parity = set(), 0
        for i in range(len(self.perm)):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = self.perm[j]
                length += 1
            parity += length - 1
        return parity % 2

    def negatives(self) -> int:
        return sum(s < 0 for s in self.signs)

    def char(self, sigma: LinearChar) -> int:
        return sigma.value(self.perm_parity(), self.negatives())


@lru_cache(maxsize=None)
def hyperoctahedral_group(n: int) -> tuple[SignedPerm, ...]:
    return tuple(SignedPerm(p, s) for p in permutations(range(n)) for s in product((1, -1), repeat=n))


def act_monomial(w: SignedPerm, e: Exponents) -> tuple[int, Exponents]:
    n = len(w.perm)
    out = [0] * (2 * n)
    sign = 1
    for i in range(n):
        j = w.perm[i]
        out[j] = e[i]
        out[n + j] = e[n + i]
        if w.signs[i] < 0 and (e[i] + e[n + i]) % 2:
            sign = -sign
    return sign, tuple(out)


def act(w: SignedPerm, p: PolyQ) -> PolyQ:
    out: PolyQ = {}
    for e, coef in p.items():
        s, e2 = act_monomial(w, e)
        v = out.get(e2, 0) + s * coef
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _group_sum(p: PolyQ, n: int, sigma: Optional[LinearChar] = None) -> PolyQ:
    out: PolyQ = {}
    for w in hyperoctahedral_group(n):
        wt = 1 if sigma is None else w.char(sigma)
        for e, coef in p.items():
            s, e2 = act_monomial(w, e)
            out[e2] = out.get(e2, 0) + wt * s * coef
    return {e: c for e, c in out.items() if c}


def reynolds(p: PolyQ, n: int) -> PolyQ:
    order = len(hyperoctahedral_group(n))
    return {e: Fraction(c, 1) / order for e, c in _group_sum(p, n).items()}


def projector(p: PolyQ, n: int, sigma: LinearChar) -> PolyQ:
    """(1/|W|) sum_w sigma(w^-1) w.p; linear characters are real so sigma(w^-1) = sigma(w)."""
    order = len(hyperoctahedral_group(n))
    return {e: Fraction(c, 1) / order for e, c in _group_sum(p, n, sigma).items()}


def monomial(n: int, xs=(), ys=()) -> Exponents:
    """Exponent tuple from lists of 1-indexed variable indices (repeats allowed)."""
    e = [0] * (2 * n)
    for i in xs:
        e[i - 1] += 1
    for i in ys:
        e[n + i - 1] += 1
    return tuple(e)


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 0:
        return ((),) if total == 0 else ()
    return tuple((k,) + rest for k in range(total, -1, -1) for rest in _compositions(total - k, parts - 1))


@lru_cache(maxsize=None)
def bidegree_monomials(n: int, a: int, b: int) -> tuple[Exponents, ...]:
    return tuple(ex + ey for ex in _compositions(a, n) for ey in _compositions(b, n))


@dataclass
class GradedReport:
    n: int
    bigraded: dict = field(default_factory=dict)  # (a, b) -> {"quotient_dim", "isotypic"}
    stop_degree: int = 0
    final: bool = True

    @property
    def per_degree(self) -> dict[int, dict]:
        return self._collapse(lambda a, b: a + b)

    def euler(self) -> dict[int, dict]:
        """Pieces grouped by deg_x - deg_y."""
        return self._collapse(lambda a, b: a - b)

    def _collapse(self, key) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for (a, b), piece in sorted(self.bigraded.items()):
            slot = out.setdefault(key(a, b), {"quotient_dim": 0, "isotypic": {s.name: 0 for s in LINEAR_CHARS}})
            slot["quotient_dim"] += piece["quotient_dim"]
            for name, v in piece["isotypic"].items():
                slot["isotypic"][name] += v
        return dict(sorted(out.items()))

    @property
    def total(self) -> int:
        return sum(p["quotient_dim"] for p in self.bigraded.values())

    def isotypic_total(self, sigma: LinearChar) -> int:
        return sum(p["isotypic"][sigma.name] for p in self.bigraded.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "stop_degree": self.stop_degree,
            "final": self.final,
            "per_degree": {str(k): v for k, v in self.per_degree.items()},
            "euler": {str(k): v for k, v in self.euler().items()},
            "bigraded": [{"deg_x": a, "deg_y": b, **v} for (a, b), v in sorted(self.bigraded.items())],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["deg_x", "deg_y", "quotient_dim"] + [s.name for s in LINEAR_CHARS])
        for (a, b), v in sorted(self.bigraded.items()):
            w.writerow([a, b, v["quotient_dim"]] + [v["isotypic"][s.name] for s in LINEAR_CHARS])
        return buf.getvalue()


def _as_row(p: PolyQ, index: dict) -> dict[int, int]:
    return integral({index[e]: c for e, c in p.items()})


def _shift(e: Exponents, var: int) -> Exponents:
    out = list(e)
    out[var] += 1
    return tuple(out)


def _isotypic_rank(vectors, n: int, sigma: LinearChar, index: dict) -> int:
    ech = Echelon()
    for v in vectors:
        proj = _group_sum(v, n, sigma)
        if proj:
            ech.add(_as_row(proj, index))
    return ech.rank


def quotient_hilbert(n: int, max_degree: Optional[int] = None, isotypic: bool = True) -> GradedReport:
    """Bigraded dimensions of R_W, with linear-character isotypic dimensions.

    ``max_degree`` caps the sweep; a capped run that has not reached a zero
    piece is returned with ``final = False``.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    if n >= 4:
        raise ValueError(f"n={n} is beyond exhaustive reach")
    if n == 3:
        warnings.warn("n=3 coinvariant sweep takes tens of seconds", RuntimeWarning, stacklevel=2)
    report = GradedReport(n)
    ideal: dict[tuple[int, int], list[PolyQ]] = {}
    D = 0
    while True:
        if max_degree is not None and D > max_degree:
            report.final = False
            report.stop_degree = D - 1
            return report
        degree_total = 0
        for a in range(D, -1, -1):
            b = D - a
            mons = bidegree_monomials(n, a, b)
            index = {e: i for i, e in enumerate(mons)}
            ech = Echelon()
            if D > 0:
                for src, offset in (((a - 1, b), 0), ((a, b - 1), n)):
                    for f in ideal.get(src, ()):
                        for i in range(n):
                            ech.add({index[_shift(e, offset + i)]: c for e, c in f.items()})
                for e in mons:
                    if ech.rank == len(mons):
                        break
                    g = _group_sum({e: 1}, n)
                    if g:
                        ech.add(_as_row(g, index))
            basis = [{mons[k]: v for k, v in row.items()} for row in ech.rows.values()]
            ideal[(a, b)] = basis
            qdim = len(mons) - ech.rank
            iso = {}
            for sigma in LINEAR_CHARS:
                if not isotypic or qdim == 0:
                    iso[sigma.name] = 0
                    continue
                full = _isotypic_rank(({e: 1} for e in mons), n, sigma, index)
                sub = _isotypic_rank(basis, n, sigma, index) if full else 0
                iso[sigma.name] = full - sub
            report.bigraded[(a, b)] = {"quotient_dim": qdim, "isotypic": iso}
            degree_total += qdim
        if degree_total == 0:
            report.stop_degree = D
            return report
        # pieces two degrees back are no longer needed
        for key in [k for k in ideal if sum(k) < D]:
            del ideal[key]
        D += 1


def isotypic_dim(n: int, sigma: LinearChar, report: Optional[GradedReport] = None) -> dict[int, int]:
    """Per total degree dimension of the ``sigma``-isotypic part of R_W."""
    report = report or quotient_hilbert(n)
    return {D: v["isotypic"][sigma.name] for D, v in report.per_degree.items()}


def epsilon_report(n: int, report: Optional[GradedReport] = None) -> dict:
    """dim R_W against the principal term (2n+1)^n, with consistency checks."""
    from .characters import eps_chi_bound

    report = report or quotient_hilbert(n)
    if not report.final:
        raise OracleError("cannot report epsilon from a truncated sweep")
    dim = report.total
    principal = (2 * n + 1) ** n
    eps = dim - principal
    chi_prime = report.isotypic_total(CHI_PRIME)
    if eps < 0:
        raise OracleError(f"dim R_W = {dim} is below (2n+1)^n = {principal}")
    need = eps_chi_bound(n).eps_chi_lower + n + 1
    if chi_prime < need:
        raise OracleError(f"chi' isotypic dimension {chi_prime} below module bound {need}")
    return {"n": n, "dim": dim, "principal": principal, "epsilon": eps, "chi_prime_dim": chi_prime,
            "det_dim": report.isotypic_total(DET)}
