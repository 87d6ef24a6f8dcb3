"""Command-line front end: ``typeb-coinv <command> ...``.

Exit status is 0 when every internal check passes, 1 when a check fails or a
resource cap is hit, and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import characters as ch
from .errors import NotCoinvariantTypeError, ParameterError, SizeLimitError
from .params import Params, parse_assignment
from .shapes import Bipartition, is_vertical_strip
from .tableaux import (
    LINEAR_EXTENSION_LIMIT,
    QFilling,
    all_p,
    canonical_p,
    count_linear_extensions,
    enumerate_tab,
    is_generic,
    p_dag,
    reconstruct_diagram,
    resolve_constraints,
    weight_sequence,
)


class CheckFailed(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    n_from: Optional[int] = None
    n_to: Optional[int] = None
    k: Optional[int] = None
    shape: tuple = ()
    target: Optional[int] = None
    fmt: str = "text"
    threads: int = 1
    max_degree: Optional[int] = None
    max_vertices: int = LINEAR_EXTENSION_LIMIT
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.threads < 1 or self.max_vertices < 1:
            raise ParameterError("caps and thread counts must be positive")
        if self.max_degree is not None and self.max_degree < 0:
            raise ParameterError("--max-degree must be non-negative")
        if self.n_from is not None and self.n_to is not None and self.n_from > self.n_to:
            raise ParameterError("empty range: --from exceeds --to")


def _parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def _rows(text: str) -> list[list[int]]:
    """``"1,3,7;1;1"`` -> ``[[1,3,7],[1],[1]]``."""
    text = text.strip()
    return [list(_parts(r)) for r in text.split(";")] if text else []


def cmd_gordon(cfg: RunConfig) -> dict:
    sc = ch.gordon_scenario(cfg.n)
    if cfg.n > cfg.max_vertices:
        raise SizeLimitError(f"n={cfg.n} exceeds --max-vertices {cfg.max_vertices}")
    cs = resolve_constraints(sc.lam, sc.params)
    tab = enumerate_tab(sc.lam, sc.params, cs)
    dim = sum(count_linear_extensions(p_dag(Q, cs)) for Q in tab)
    det = ch.multiplicity_linear(sc.lam, ch.DET, sc.params, cs)[1]
    chi = ch.multiplicity_linear(sc.lam, ch.CHI, sc.params, cs)[1]
    out = {"n": cfg.n, "c": str(sc.params.c), "d": str(sc.params.d),
           "tab": len(tab), "dim": dim, "det": det, "chi": chi}
    if dim != (2 * cfg.n + 1) ** cfg.n or det != 1 or chi != cfg.n + 1:
        raise CheckFailed(json.dumps(out))
    return out


def _scenario_report(sc: ch.Scenario) -> dict:
    rep = ch.run_scenario(sc, strict=False)
    out = {"n": sc.params.n, "scenario": sc.label, "c": str(sc.params.c), "d": str(sc.params.d),
           "det": rep.det_mult, "chi": rep.chi_mult_total, "chi_generic": rep.chi_mult_generic,
           "eps_chi": rep.eps_chi_lower}
    cs = resolve_constraints(sc.lam, sc.params)
    out["chi_fillings"] = [Q.rows()[0] for Q in
                           (o.Q for o in ch.linear_candidates(sc.lam, ch.CHI, sc.params, cs) if o.occurs)]
    out["det_fillings"] = [Q.rows()[0] for Q in
                           (o.Q for o in ch.linear_candidates(sc.lam, ch.DET, sc.params, cs) if o.occurs)]
    if not rep.coinvariant_type:
        raise CheckFailed(json.dumps(out))
    return out


def cmd_rect(cfg: RunConfig) -> dict:
    sc = ch.rect_scenario(cfg.shape, cfg.target)
    if cfg.n is not None and cfg.n != sc.params.n:
        raise ParameterError(f"shape has {sc.params.n} boxes but --n {cfg.n}")
    return _scenario_report(sc)


def cmd_hook(cfg: RunConfig) -> dict:
    sc = ch.hook_scenario(cfg.n, cfg.k)
    out = _scenario_report(sc)
    out["k"] = sc.detail["k"]
    return out


def cmd_bounds(cfg: RunConfig) -> dict:
    reports = ch.bounds_table(range(cfg.n_from, cfg.n_to + 1), workers=cfg.threads,
                              conservative=bool(cfg.extra.get("conservative")))
    rows = []
    ok = True
    for r in reports:
        row = r.to_json()
        row["ok"] = r.coinvariant_type and r.eps_chi_lower >= r.theorem_bound
        ok &= row["ok"]
        rows.append(row)
    out = {"rows": rows, "ok": ok}
    if not ok:
        raise CheckFailed(json.dumps(out))
    return out


def cmd_oracle(cfg: RunConfig):
    from .oracle import epsilon_report, quotient_hilbert

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        rep = quotient_hilbert(cfg.n, max_degree=cfg.max_degree)
    if cfg.fmt == "csv":
        return rep.to_csv()
    out = rep.to_json()
    if not rep.final:
        out["warning"] = "sweep truncated by --max-degree; dimensions are partial"
        raise CheckFailed(json.dumps(out))
    out["epsilon"] = epsilon_report(cfg.n, rep)
    return out


def cmd_diagram(cfg: RunConfig) -> dict:
    lam = Bipartition(cfg.shape, cfg.extra.get("shape1", ()))
    values = dict(cfg.extra.get("params", {}))
    if set(values) != {"c", "d"}:
        raise ParameterError("diagram needs --param c=... and --param d=...")
    p = Params(values["c"], values["d"], lam.size)
    Q = QFilling.from_rows(lam, cfg.extra["q0"], cfg.extra.get("q1", []))
    cs = resolve_constraints(lam, p)
    Ps = list(all_p(Q, cs)) if cfg.extra.get("all_p") else [canonical_p(Q, cs)]
    views = []
    for P in Ps:
        w = weight_sequence(P, Q, p)
        d, t = reconstruct_diagram(w, p)
        views.append({"P": list(P.values), "weights": w.to_json(), "diagram": d.to_json(),
                      "tableau": [[k[0], k[1], list(k[2]), lab] for k, lab in t.entries],
                      "d0_vertical_strip": is_vertical_strip(d, 0),
                      "d1_vertical_strip": is_vertical_strip(d, 1)})
    return {"shape": str(lam), "params": str(p), "Q": Q.rows(), "generic": is_generic(Q, cs),
            "box_bounds": {str(b): k for b, k in cs.box_bounds.items()},
            "pair_bounds": [[str(pb.b), str(pb.b2), pb.kappa] for pb in cs.pair_bounds],
            "p_independent": len({json.dumps(v["diagram"]) for v in views}) == 1,
            "views": views}


COMMANDS = {"gordon": cmd_gordon, "rect": cmd_rect, "hook": cmd_hook,
            "bounds": cmd_bounds, "oracle": cmd_oracle, "diagram": cmd_diagram}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="typeb-coinv", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-vertices", type=int, default=LINEAR_EXTENSION_LIMIT)
        return p

    g = common(sub.add_parser("gordon", help="Gordon module L(triv) at c=d=(2n+1)/2n"))
    g.add_argument("--n", type=int, required=True)

    r = common(sub.add_parser("rect", help="rectangular lowest weight at generic c"))
    r.add_argument("--shape", type=_parts, required=True)
    r.add_argument("--target", type=int, required=True)
    r.add_argument("--n", type=int)

    h = common(sub.add_parser("hook", help="hook lowest weight (k, 1^(n-k))"))
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--k", type=int)

    b = common(sub.add_parser("bounds", help="eps_chi lower bounds over a range of ranks"))
    b.add_argument("--from", dest="n_from", type=int, required=True)
    b.add_argument("--to", dest="n_to", type=int, required=True)
    b.add_argument("--conservative", action="store_true", help="count only generic chi fillings")

    o = common(sub.add_parser("oracle", help="brute-force coinvariant ring (n <= 3)"))
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--max-degree", type=int)

    d = common(sub.add_parser("diagram", help="reconstruct D_{Q,c,d} for one filling"))
    d.add_argument("--shape", type=_parts, required=True, help="first partition, e.g. 3,1,1")
    d.add_argument("--shape1", type=_parts, default=(), help="second partition")
    d.add_argument("--q", type=_rows, required=True, help="rows of Q on the first partition, e.g. '1,3,7;1;1'")
    d.add_argument("--q1", type=_rows, default=[], help="rows of Q on the second partition")
    d.add_argument("--param", action="append", default=[], help="c=<expr> or d=<expr>; t is the formal parameter")
    d.add_argument("--all-p", action="store_true", help="reconstruct for every admissible P")
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra = {}
    if ns.command == "bounds":
        extra["conservative"] = ns.conservative
    if ns.command == "diagram":
        extra.update(shape1=ns.shape1, q0=ns.q, q1=ns.q1, all_p=ns.all_p,
                     params=dict(parse_assignment(a) for a in ns.param))
    return RunConfig(
        command=ns.command, n=getattr(ns, "n", None), n_from=getattr(ns, "n_from", None),
        n_to=getattr(ns, "n_to", None), k=getattr(ns, "k", None), shape=getattr(ns, "shape", ()),
        target=getattr(ns, "target", None), fmt=ns.fmt, threads=ns.threads,
        max_degree=getattr(ns, "max_degree", None), max_vertices=ns.max_vertices, extra=extra)


def render(result, fmt: str) -> str:
    if isinstance(result, str):
        return result.rstrip("\n")
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2)
    if fmt == "csv" and "rows" in result:
        keys = list(result["rows"][0])
        lines = [",".join(keys)] + [",".join(str(r[k]) for k in keys) for r in result["rows"]]
        return "\n".join(lines)
    if "rows" in result:
        keys = list(result["rows"][0])
        lines = ["  ".join(f"{k:>13}" for k in keys)]
        lines += ["  ".join(f"{str(r[k]):>13}" for k in keys) for r in result["rows"]]
        return "\n".join(lines)
    return "\n".join(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}" for k, v in result.items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        result = COMMANDS[cfg.command](cfg)
    except (SizeLimitError, NotCoinvariantTypeError) as exc:
        # caps and failed assertions, not usage; SizeLimitError is also a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(str(exc))
        print("check failed", file=sys.stderr)
        return 1
    print(render(result, cfg.fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
