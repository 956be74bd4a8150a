"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical hypothesis fails (or a
checked inequality does not hold), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from . import verify as V
from .groebner import buchberger
from .hilbert import (
    HilbertPolynomialNotStable,
    buchberger_moller,
    hilbert_poly_estimate,
    hilbert_table,
)
from .points import PointSet, PointSetError
from .poly import (
    ArityError,
    Polynomial,
    PolynomialSyntaxError,
    TermOrder,
    format_monomial,
    format_polynomial,
    max_variable_index,
    parse_polynomial,
)


class InputError(Exception):
    """Malformed command line or input file (exit 2)."""


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def _content_lines(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: cannot read: {e.strerror}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def read_ideal(path: str, arity: int | None = None) -> tuple[list[Polynomial], int]:
    """One polynomial per line; arity defaults to the highest variable index used."""
    lines = list(_content_lines(path))
    if arity is None:
        arity = max((max_variable_index(line) for _, line in lines), default=0)
        if arity == 0:
            raise InputError(f"{path}: cannot infer arity from the file; pass --arity")
    gens = []
    for lineno, line in lines:
        try:
            gens.append(parse_polynomial(line, arity))
        except PolynomialSyntaxError as e:
            raise InputError(f"{path}:{lineno}:{e.pos + 1}: {e.message}") from None
    return gens, arity


def read_points(path: str) -> PointSet:
    """One point per line, whitespace-separated rational coordinates."""
    pts = []
    for lineno, line in _content_lines(path):
        row = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            try:
                row.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise InputError(f"{path}:{lineno}:{col + 1}: invalid rational {tok!r}") from None
            col += len(tok)
        if pts and len(row) != len(pts[0]):
            raise InputError(f"{path}:{lineno}: expected {len(pts[0])} coordinates, found {len(row)}")
        pts.append(tuple(row))
    if not pts:
        raise InputError(f"{path}: no points")
    try:
        return PointSet.of(pts)
    except PointSetError as e:
        raise InputError(f"{path}: {e}") from None


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Polynomial):
        return format_polynomial(x)
    return x


def render_report(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2)


def _points_out(A: PointSet) -> list[list[str]]:
    return [[str(x) for x in p] for p in A.points]


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def _family(name: str) -> B.Family:
    return B.Family(name)


def cmd_bound(args) -> tuple[dict, bool]:
    family = _family(args.family)
    gens: list[Polynomial] = []
    n = args.n
    if family is B.Family.GENERAL:
        if not args.ideal:
            raise InputError("--ideal is required for --family general")
        gens, n = read_ideal(args.ideal, args.arity or args.n)
    elif n is None:
        raise InputError(f"--n is required for --family {family.value}")
    params = {"n": n, "d": args.d, "p": args.p, "q": args.q}
    missing = [k for k in B.required_parameters(family) if params.get(k) is None]
    if missing:
        raise InputError(f"--family {family.value} needs " + ", ".join(f"--{k}" for k in missing))
    s_values = range(_grid_start(family), args.s + 1) if args.grid else [args.s]
    rows = []
    for s in s_values:
        rep = B.evaluate_bound(family, s, gens, **params)
        rows.append({"s": s, "value": rep.value, "formula": rep.formula_text})
    result = dict(rows[-1]) if not args.grid else {"table": rows}
    params_echo = {k: v for k, v in params.items() if v is not None}
    params_echo.update(family=family.value, s=args.s)
    if args.ideal:
        params_echo["ideal"] = args.ideal
    return {"verb": "bound", "parameters": params_echo, "results": result}, True


def _grid_start(family: B.Family) -> int:
    return 0 if family in (B.Family.BOX, B.Family.PERMUTATION, B.Family.UNIFORM, B.Family.GENERAL) else 1


def cmd_hilbert(args) -> tuple[dict, bool]:
    gens, n = read_ideal(args.ideal, args.arity)
    params = {"ideal": args.ideal, "arity": n}
    results: dict = {}
    if args.s is not None:
        params["s"] = args.s
        table = hilbert_table(gens, args.s, n)
        results["value"] = table[args.s]
        results["table"] = table.as_list()
    if args.estimate_poly:
        if args.s_lo is None or args.s_hi is None:
            raise InputError("--estimate-poly needs --s-lo and --s-hi")
        params.update(s_lo=args.s_lo, s_hi=args.s_hi)
        est = hilbert_poly_estimate(gens, args.s_lo, args.s_hi, n)
        results["estimate"] = {
            "dimension": est.dimension,
            "degree": est.degree,
            "coefficients": list(est.coefficients),
            "stable_from": est.stable_from,
            "values": [est.values[s] for s in sorted(est.values)],
        }
    if not results:
        raise InputError("hilbert needs --s or --estimate-poly")
    return {"verb": "hilbert", "parameters": params, "results": results}, True


def cmd_groebner(args) -> tuple[dict, bool]:
    gens, n = read_ideal(args.ideal, args.arity)
    order = TermOrder.parse(args.order)
    params = {"ideal": args.ideal, "arity": n, "order": order.value}
    if all(g.is_zero() for g in gens):
        return {"verb": "groebner", "parameters": params, "results": {"basis": [], "leading_monomials": []}}, True
    G = buchberger(gens, order)
    results = {
        "basis": [format_polynomial(g, order) for g in G],
        "leading_monomials": [format_monomial(m) for m in G.leading_monomials()],
    }
    return {"verb": "groebner", "parameters": params, "results": results}, True


def cmd_vanishing(args) -> tuple[dict, bool]:
    A = read_points(args.points)
    order = TermOrder.parse(args.order)
    G, sm = buchberger_moller(A, order)
    results = {
        "basis": [format_polynomial(g, order) for g in G],
        "standard_monomials": [format_monomial(m) for m in sm],
        "size": len(A),
    }
    return {"verb": "vanishing-ideal", "parameters": {"points": args.points, "order": order.value}, "results": results}, True


def cmd_verify(args) -> tuple[dict, bool]:
    A = read_points(args.points)
    params: dict = {"points": args.points}
    results: dict = {}
    ok = True
    if args.family or args.ideal:
        gens: list[Polynomial] = []
        if args.ideal:
            gens, _ = read_ideal(args.ideal, A.arity)
            family = B.Family.GENERAL
            params["ideal"] = args.ideal
        else:
            family = _family(args.family)
        fam_params = {"d": args.d, "p": args.p, "q": args.q}
        if args.n is not None:
            fam_params["n"] = args.n
        params["family"] = family.value
        params.update({k: v for k, v in fam_params.items() if v is not None})
        chk = V.check_distance_bound(A, family, gens, **fam_params)
        results.update(s=chk.s, size=chk.size, bound=chk.bound, holds=chk.holds, formula=chk.report.formula_text)
        if len(A) >= 2:
            results["squared_distances"] = list(V.squared_distance_set(A).values)
        ok &= chk.holds
    if args.pp_check:
        if args.poly:
            polys, _ = read_ideal(args.poly, 2 * A.arity)
            if len(polys) != 1:
                raise InputError(f"{args.poly}: expected exactly one polynomial")
            p = polys[0]
            params["poly"] = args.poly
        else:
            p = V.canonical_pp_polynomial(A)
        s = args.s if args.s is not None else (len(V.squared_distance_set(A)) if len(A) >= 2 else 0)
        params["s"] = s
        pp = V.check_pp_theorem(A, p, s)
        results["pp"] = {
            "rank": pp.rank,
            "r_plus": pp.signature.r_plus,
            "r_minus": pp.signature.r_minus,
            "r_zero": pp.signature.r_zero,
            "h": pp.h_value,
            "rank_ok": pp.rank_ok,
            "inertia_ok": pp.inertia_ok,
        }
        ok &= pp.rank_ok and pp.inertia_ok
    if not results:
        raise InputError("verify needs --family, --ideal or --pp-check")
    return {"verb": "verify", "parameters": params, "results": results}, ok


def _csv_rationals(text: str, option: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{option}: expected comma-separated rationals, got {text!r}") from None


def cmd_search(args) -> tuple[dict, bool]:
    gen = args.generator
    params: dict = {"generator": gen, "s": args.s}

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise InputError(f"--{name.replace('_', '-')} is required for --generator {gen}")
        return v

    bound = None
    if gen == "box":
        n = need("n")
        T = _csv_rationals(args.values, "--values") if args.values else list(range(need("q")))
        params.update(n=n, values=T)
        cands = V.box(*([T] * n))
        bound = B.box_bound(n, len(T), args.s)
    elif gen == "uniform":
        n, d = need("n"), need("d")
        params.update(n=n, d=d)
        cands = V.uniform_layer(n, d)
        if 0 <= args.s <= min(d, n - d):
            bound = B.uniform_bound(n, d, args.s)
    elif gen == "perm":
        alphas = _csv_rationals(args.values, "--values") if args.values else list(range(1, need("n") + 1))
        params.update(values=alphas)
        cands = V.permutations(*alphas)
        bound = B.permutation_bound(len(alphas), args.s)
    elif gen == "even-weight":
        n = need("n")
        params.update(n=n)
        cands = V.even_weight(n)
        bound = B.box_bound(n, 2, args.s)
    else:
        n, count = need("n"), need("count")
        seed = args.seed if args.seed is not None else int(os.environ.get("SDIST_SEED", "0"))
        radius2 = Fraction(args.radius2)
        params.update(n=n, count=count, seed=seed, radius2=radius2)
        cands = V.sphere_sample([0] * n, radius2, count, seed)
        if args.s >= 1:
            bound = B.dgs_bound(n, args.s)
    if args.size_cap is not None:
        params["size_cap"] = args.size_cap
    res = V.brute_force_max_sdist(cands, args.s, args.size_cap)
    results = {
        "candidates": len(cands),
        "max_size": res.max_size,
        "witness": _points_out(res.witness) if res.witness else [],
        "bound": bound,
        "within_bound": None if bound is None else res.max_size <= bound,
    }
    return {"verb": "search", "parameters": params, "results": results}, bound is None or res.max_size <= bound


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sdist", description="Bounds for s-distance sets in real algebraic sets.")
    ap.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    sub = ap.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("bound", help="evaluate a closed-form or Hilbert-function bound")
    b.add_argument("--family", required=True, choices=[f.value for f in B.Family])
    b.add_argument("--n", type=_nonneg)
    b.add_argument("--s", type=_nonneg, required=True)
    b.add_argument("--d", type=_nonneg)
    b.add_argument("--p", type=_nonneg)
    b.add_argument("--q", type=_nonneg)
    b.add_argument("--ideal")
    b.add_argument("--arity", type=_nonneg)
    b.add_argument("--grid", action="store_true", help="tabulate every s up to --s")
    b.set_defaults(func=cmd_bound)

    h = sub.add_parser("hilbert", help="affine Hilbert function of an ideal")
    h.add_argument("--ideal", required=True)
    h.add_argument("--s", type=_nonneg)
    h.add_argument("--arity", type=_nonneg)
    h.add_argument("--estimate-poly", action="store_true")
    h.add_argument("--s-lo", type=_nonneg)
    h.add_argument("--s-hi", type=_nonneg)
    h.set_defaults(func=cmd_hilbert)

    g = sub.add_parser("groebner", help="reduced Groebner basis")
    g.add_argument("--ideal", required=True)
    g.add_argument("--order", choices=["lex", "deglex"], default="deglex")
    g.add_argument("--arity", type=_nonneg)
    g.set_defaults(func=cmd_groebner)

    vi = sub.add_parser("vanishing-ideal", help="Groebner basis of the ideal of a point set")
    vi.add_argument("--points", required=True)
    vi.add_argument("--order", choices=["lex", "deglex"], default="deglex")
    vi.set_defaults(func=cmd_vanishing)

    v = sub.add_parser("verify", help="check a bound or the rank/inertia inequalities on a point set")
    v.add_argument("--points", required=True)
    grp = v.add_mutually_exclusive_group()
    grp.add_argument("--family", choices=[f.value for f in B.Family if f is not B.Family.GENERAL])
    grp.add_argument("--ideal")
    v.add_argument("--n", type=_nonneg)
    v.add_argument("--d", type=_nonneg)
    v.add_argument("--p", type=_nonneg)
    v.add_argument("--q", type=_nonneg)
    v.add_argument("--pp-check", action="store_true")
    v.add_argument("--s", type=_nonneg)
    v.add_argument("--poly")
    v.set_defaults(func=cmd_verify)

    se = sub.add_parser("search", help="exhaustive maximum s-distance subset of a family")
    se.add_argument("--generator", required=True, choices=["box", "uniform", "perm", "even-weight", "sphere"])
    se.add_argument("--s", type=_nonneg, required=True)
    se.add_argument("--n", type=_nonneg)
    se.add_argument("--q", type=_nonneg)
    se.add_argument("--d", type=_nonneg)
    se.add_argument("--values", help="comma-separated coordinate values (box) or alphas (perm)")
    se.add_argument("--count", type=_nonneg)
    se.add_argument("--radius2", default="1")
    se.add_argument("--seed", type=int)
    se.add_argument("--size-cap", type=_nonneg)
    se.set_defaults(func=cmd_search)
    return ap


def _summary_items(results: dict):
    for k, v in results.items():
        if isinstance(v, (int, bool, str)):
            yield f"{k}={v}"
        elif isinstance(v, (list, tuple)):
            yield f"{k}: {len(v)} entries"
        elif isinstance(v, dict):
            yield f"{k}: " + " ".join(f"{kk}={vv}" for kk, vv in v.items() if isinstance(vv, (int, bool)))


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t0 = time.perf_counter()
    try:
        report, ok = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=stderr)
        return 2
    except (PolynomialSyntaxError, ArityError, PointSetError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    except (V.HypothesisViolation, B.BoundDomainError, HilbertPolynomialNotStable) as e:
        print(f"hypothesis violated: {e}", file=stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return 2
    elapsed = (time.perf_counter() - t0) * 1000
    if args.timing:
        report["timing_ms"] = round(elapsed, 3)
    print(render_report(report), file=stdout)
    summary = ", ".join(_summary_items(report["results"]))
    print(f"{report['verb']}: {summary} ({elapsed:.1f} ms)", file=stderr)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
