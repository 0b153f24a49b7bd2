"""Command-line interface: ``torifan <command> ...``; results are printed as JSON."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .classify import (Kind, build_sigma_r, classify_surface, farey_path,
                       farey_value, parse_rational, _check_r)
from .enumeration import enumerate_classes, thread_cap, verify_reports
from .errors import (BadRational, IntegerInput, InternalContradiction,
                     ParseError, TorifanError)
from .fan2d import weights_of
from .horospherical import house_models
from .render import FORMATS, render
from .resolve import determinant_check, wps_resolution

EXIT_OK = 0


def _frac(r: Fraction | None) -> str | None:
    return None if r is None else f"{r.numerator}/{r.denominator}"


def _rays(rays) -> list[list[int]]:
    return [list(v) for v in rays]


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def cmd_classify(args) -> dict:
    if args.weights is not None:
        g = io.graph_from_json(args.weights)
    else:
        text = Path(args.fan[1:]).read_text() if args.fan.startswith("@") else args.fan
        g = weights_of(io.fan2_from_json(text))
    res = classify_surface(g)
    out = {"kind": res.kind.value, "n": g.n, "weights": list(g.weights),
           "exceptional_count": res.exceptional_count, "r": None, "a": None, "path": None,
           "blow_down_chain": []}
    if res.kind is Kind.FAREY:
        out.update(r=_frac(res.r), a=res.index.a, path="".join(res.index.path),
                   delta=_frac(res.index.delta), reflected=res.reflected,
                   blow_down_chain=[{"vertex": v, "step": s} for v, s in res.blow_down_chain])
    return out


def cmd_build(args) -> dict:
    try:
        r = _check_r(args.r)
    except IntegerInput as exc:
        raise BadRational(f"{args.r!r} is an integer, need a non-integer b/c") from exc
    fan = build_sigma_r(r)
    out = {"r": _frac(r), "rays": _rays(fan.rays), "weights": list(fan.weights),
           "exceptional_ray": list(fan.rays[0])}
    if args.render:
        path = Path(args.out or f"sigma_{r.numerator}_{r.denominator}.{args.render}")
        path.write_text(render(fan, args.render))
        out["figure"] = str(path)
    return out


def _chain(rd) -> dict:
    return {"cone": [list(rd.cone.gen_a), list(rd.cone.gen_b)], "order": rd.cone.det,
            "rays": _rays(rd.interior_rays), "self_intersections": list(rd.self_intersections),
            "determinant_check": determinant_check(rd)}


def cmd_resolve(args) -> dict:
    c, b = _int(args.c, "c"), _int(args.b, "b")
    res = wps_resolution(c, b)
    return {"c": c, "b": b, "wps_rays": [[b, c], [-1, 0], [0, -1]],
            "chains": {"order_c": _chain(res.toward_x), "order_b": _chain(res.toward_y)},
            "determinant_check": determinant_check(res.toward_x) and determinant_check(res.toward_y),
            "rays": _rays(res.fan.rays), "weights": list(res.fan.weights)}


def _fan3(f) -> dict:
    out = io.fan3_to_json(f)
    out.update(n_rays=len(f.rays), n_max_cones=len(f.max_cones),
               smooth=f.is_smooth(), complete=f.is_complete())
    return out


def cmd_house(args) -> dict:
    p, q = _int(args.p, "p"), _int(args.q, "q")
    fib, psi, phi = house_models(p, q)
    r = Fraction(p + q, p)
    out = {"p": p, "q": q, "r": _frac(r), "house": _fan3(phi)}
    if args.all:
        out["fibration"] = _fan3(fib)
        out["psi_contraction"] = _fan3(psi)
    return out


def cmd_farey(args) -> dict:
    if args.path is not None:
        path = args.path.strip().upper()
        if any(s not in "LR" for s in path):
            raise ParseError(f"path must consist of L and R, got {args.path!r}")
        delta = farey_value(path)
        return {"path": path, "delta": _frac(delta), "level": len(path)}
    if args.rational is None:
        raise ParseError("give a rational or --path")
    x = parse_rational(args.rational)
    a = x.numerator // x.denominator
    path = "".join(farey_path(x - a))
    return {"value": _frac(x), "a": a, "delta": _frac(x - a), "path": path, "level": len(path)}


def cmd_enumerate(args) -> dict:
    max_n, max_a = _int(args.max_n, "max_n"), _int(args.max_a, "max_a")
    workers = args.threads if args.threads is not None else thread_cap()
    reports = enumerate_classes(max_n, max_a, workers)
    checks = verify_reports(reports, max_a)
    out = {"max_n": max_n, "max_a": max_a,
           "per_a_asserted_for": f"a <= {max_a - 2}",
           "reports": [r.to_dict() for r in reports],
           "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks]}
    failed = [n for n, ok, _ in checks if not ok]
    if failed:
        print(json.dumps(out, indent=2))
        raise InternalContradiction(f"enumeration checks failed: {failed}")
    return out


def cmd_check(args) -> int:
    from .acceptance import format_line, run_one, CRITERIA

    failed = 0
    for num, _, _ in CRITERIA:
        res = run_one(num)
        print(format_line(res), flush=True)
        failed += not res.passed
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria passed")
    if failed:
        raise InternalContradiction(f"{failed} acceptance criteria failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torifan", description=__doc__)
    parser.add_argument("--json", action="store_true", default=True,
                        help="print JSON (the only output format)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a surface by weights or fan")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--weights", help='JSON list, e.g. "[-1,-2,1,0,-2,-2]"')
    g.add_argument("--fan", help='fan JSON {"rays": [...]}, or @file')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="fan of S_r for r = b/c")
    p.add_argument("r")
    p.add_argument("--render", choices=FORMATS)
    p.add_argument("--out", help="figure path (default sigma_<b>_<c>.<fmt>)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("resolve", help="minimal resolution of P(1,c,b)")
    p.add_argument("c")
    p.add_argument("b")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("house", help="3D fan of the house model A_{p,q}")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--all", action="store_true", help="also emit the fibred fan and the psi contraction")
    p.set_defaults(func=cmd_house)

    p = sub.add_parser("farey", help="Farey path of a rational, or value of a path")
    p.add_argument("rational", nargs="?")
    p.add_argument("--path")
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("enumerate", help="enumerate surfaces up to isomorphism")
    p.add_argument("max_n")
    p.add_argument("max_a")
    p.add_argument("--threads", type=int, help="worker processes (default TORIFAN_THREADS or 1)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="run the acceptance suite")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except TorifanError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    if isinstance(out, dict):
        print(json.dumps(out, indent=2))
        return EXIT_OK
    return out


if __name__ == "__main__":
    sys.exit(main())
