"""Command-line front end.

Exit codes: 0 success, 1 golden mismatch, 2 usage error, 3 resource guard.
"""
from __future__ import annotations

import argparse
import json
import platform
import random
import sys
import time
from fractions import Fraction

import numpy as np

from . import __version__, _kernels, construct, equidist, golden, homog
from .enumerate import ResourceError, divisor_sum_profile, enum_A_box, enum_T, enum_Tbar, enum_V
from .exact import DomainError, format_rational, parse_rational
from .fit import DENSE, JUMPS, fit_steps, read_step_csv, write_step_csv
from .membership import verify_T_tuple, verify_Tbar_tuple

SCHEMA = "floorsq/1"
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class Mismatch(Exception):
    def __init__(self, result):
        self.result = result


def _num(v):
    if isinstance(v, float):
        return float(f"{v:.12g}")
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, dict):
        return {k: _num(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_num(x) for x in v]
    return v


def _dump(doc) -> str:
    return json.dumps(_num(doc), indent=2, ensure_ascii=False) + "\n"


def _triples_str(ts):
    return [[str(v) for v in t] for t in ts]


# ---------------------------------------------------------------- commands


def cmd_table1(args):
    gold = golden.table1()
    labels = golden.table1_labels()
    alphas = [parse_rational(a) for a in args.alpha] if args.alpha else sorted(gold)
    rows, ok = [], True
    for a in alphas:
        if a not in gold:
            raise DomainError(f"alpha={a} is not a golden row")
        rep = enum_T(a, args.x, workers=args.workers)
        want = gold[a] if args.x == 10_000 else None
        got = rep.index_triples
        row = {
            "label": labels[a],
            "alpha": format_rational(a),
            "count_index_triples": len(got),
            "count_value_triples": len(rep.value_triples),
            "index_triples": _triples_str(got),
        }
        if want is not None:
            row["match"] = got == want
            if not row["match"]:
                ok = False
                row["missing"] = _triples_str(sorted(set(want) - set(got)))
                row["unexpected"] = _triples_str(sorted(set(got) - set(want)))
        rows.append(row)
    result = {"x": args.x, "rows": rows, "match": ok}
    if not ok:
        raise Mismatch(result)
    return result


def _figure_points(rep, x_max):
    pts = rep.step_points()
    lo = 2
    if not pts or pts[0][0] > lo:
        pts = [(lo, 0)] + pts
    if pts[-1][0] < x_max:
        pts.append((x_max, pts[-1][1]))
    return pts


def cmd_figure(args):
    alpha = _alpha(args)
    rep = enum_T(alpha, args.x, workers=args.workers)
    pts = _figure_points(rep, args.x)
    if args.format == "csv":
        return write_step_csv(pts)
    return {"alpha": format_rational(alpha), "x_max": args.x,
            "final_count": len(rep.value_triples), "points": pts}


def cmd_fit(args):
    if args.csv == "-":
        text = sys.stdin.read()
    else:
        with open(args.csv) as fh:
            text = fh.read()
    pts = read_step_csv(text)
    conventions = [DENSE, JUMPS] if args.sample == "both" else [args.sample]
    return {"fits": [fit_steps(pts, c).to_dict() for c in conventions]}


def cmd_vsearch(args):
    got = enum_V(args.x)
    result = {"x": args.x, "count": len(got), "index_triples": _triples_str(got)}
    gold = golden.v46300()
    if args.x <= 46300:
        want = [t for t in gold if t[2] <= args.x]
        result["match"] = got == want
        if not result["match"]:
            result["expected"] = _triples_str(want)
            raise Mismatch(result)
    return result


def cmd_construct(args):
    fam = args.family
    if fam == "floor":
        c = construct.floor_family(_alpha(args), args.n)
    elif fam == "floor_A":
        c = construct.floor_family_A(_alpha(args), _region(args), args.n)
    elif fam == "ceil_odd":
        c = construct.ceil_family_odd(args.q, args.p, args.n)
    elif fam == "ceil_intervals":
        c = construct.ceil_family_intervals(_alpha(args), args.n)
    else:
        c = construct.ceil_family_region(_alpha(args), _region(args), args.n)
    return c.to_dict()


def cmd_enum(args):
    if args.box:
        a1, a2, a3 = (int(v) for v in args.box.split(","))
        count, tuples = enum_A_box(args.x, a1, a2, a3)
        return {"x": args.x, "shifts": [a1, a2, a3], "count": count, "tuples": _triples_str(tuples)}
    if args.profile:
        a1, a2 = (int(v) for v in args.profile.split(","))
        return {"x": args.x, "shifts": [a1, a2], "profile": divisor_sum_profile(args.x, a1, a2)}
    alpha = _alpha(args)
    f = enum_Tbar if args.bar else enum_T
    rep = f(alpha, args.x, workers=args.workers)
    if args.format == "csv":
        return "".join(",".join(str(v) for v in t) + "\n" for t in rep.index_triples)
    return rep.to_dict()


def cmd_homog(args):
    alpha = _alpha(args)
    witness = tuple(int(v) for v in args.witness.split(","))
    if args.system == "brick":
        system = homog.euler_brick_system()
    elif args.system == "perfect-brick":
        system = homog.perfect_brick_system()
    else:
        system = [homog.HomPoly.diagonal((1, 1, -1), 2)]
    scan = homog.scan_multipliers(system, witness, alpha, args.n, args.kind)
    return {"alpha": format_rational(alpha), "system": args.system, "kind": args.kind,
            "N": args.n, "count": scan.count, "density": float(scan.density),
            "multipliers_head": scan.multipliers[:50]}


def cmd_equidist(args):
    rng = random.Random(args.seed)
    if args.alpha:
        alphas = [parse_rational(args.alpha)]
    else:
        alphas = [equidist.random_alpha(rng, Fraction(1, 10), Fraction(9, 10)) for _ in range(args.samples)]
    half = Fraction(1, 2)
    rows = []
    for a in alphas:
        pts = equidist.frac_sequence(a, args.n)
        rows.append({
            "alpha": format_rational(a),
            "box_half_half": float(equidist.box_frequency(a, args.n, ((0, half), (0, half)), pts)),
            "weyl_1_1": equidist.weyl_sum(1, 1, a, args.n, pts),
        })
    return {"N": args.n, "seed": args.seed, "samples": rows}


def cmd_verify(args):
    alpha = _alpha(args)
    idx = tuple(int(v) for v in args.idx.split(","))
    rec = (verify_Tbar_tuple if args.bar else verify_T_tuple)(alpha, idx)
    return rec.to_dict()


# ---------------------------------------------------------------- plumbing


def _alpha(args) -> Fraction:
    if args.alpha is None:
        raise DomainError("--alpha is required")
    return parse_rational(args.alpha)


def _region(args):
    return construct.RegionSpec(parse_rational(args.s), parse_rational(args.t))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default="-")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="default: csv for figure, json otherwise")

    ap = argparse.ArgumentParser(prog="floorsq", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table1", parents=[common], help="recompute #U_{<=10^4}(alpha) rows")
    s.add_argument("--alpha", action="append")
    s.add_argument("--x", type=int, default=10_000)
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("figure", parents=[common], help="step data (x, #T_{<=x}) as CSV")
    s.add_argument("--alpha", required=True)
    s.add_argument("--x", type=int, required=True)
    s.set_defaults(func=cmd_figure)

    s = sub.add_parser("fit", parents=[common], help="fit lambda log x + kappa to step CSV")
    s.add_argument("csv")
    s.add_argument("--sample", choices=(DENSE, JUMPS, "both"), default="both")
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("vsearch", parents=[common], help="variant-brick search V(x)")
    s.add_argument("x", type=int, nargs="?", default=46300)
    s.set_defaults(func=cmd_vsearch)

    s = sub.add_parser("construct", parents=[common], help="Pell-based tuple families")
    s.add_argument("--family", choices=("floor", "floor_A", "ceil_odd", "ceil_intervals", "ceil_region"),
                   default="floor")
    s.add_argument("--alpha")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--q", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--s")
    s.add_argument("--t")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enum", parents=[common], help="enumerate T_{<=x}, A-boxes, divisor profiles")
    s.add_argument("--alpha")
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--bar", action="store_true", help="ceiling variant")
    s.add_argument("--box", help="a1,a2,a3: count A(x, a1, a2, a3)")
    s.add_argument("--profile", help="a1,a2: divisor-sum profile")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("homog", parents=[common], help="multiplier scan for bracket equations")
    s.add_argument("--alpha", required=True)
    s.add_argument("--system", choices=("brick", "perfect-brick", "pythagorean"), default="brick")
    s.add_argument("--witness", default="240,117,44,267,244,125")
    s.add_argument("--n", type=int, default=10_000)
    s.add_argument("--kind", choices=homog.KINDS, default=homog.FLOOR)
    s.set_defaults(func=cmd_homog)

    s = sub.add_parser("equidist", parents=[common], help="box frequencies and Weyl sums")
    s.add_argument("--alpha")
    s.add_argument("--n", type=int, default=200)
    s.add_argument("--samples", type=int, default=20)
    s.set_defaults(func=cmd_equidist)

    s = sub.add_parser("verify", parents=[common], help="seven-sum check of an index triple")
    s.add_argument("--alpha", required=True)
    s.add_argument("--idx", required=True, help="n1,n2,n3")
    s.add_argument("--bar", action="store_true")
    s.set_defaults(func=cmd_verify)
    return ap


def _emit(args, result, manifest, code):
    if isinstance(result, str):
        text = result
    else:
        text = _dump({"schema": SCHEMA, "manifest": manifest, "result": result})
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "figure" else "json"
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "out", "workers")}
    manifest = {
        "subcommand": args.command,
        "parameters": params,
        "versions": {"floorsq": __version__, "python": platform.python_version(),
                     "numpy": np.__version__, "backend": _kernels.backend()},
        "workers": args.workers,
    }
    t0 = time.perf_counter()
    try:
        result = args.func(args)
        code = EXIT_OK
    except Mismatch as exc:
        result, code = exc.result, EXIT_MISMATCH
    except DomainError as exc:
        print(f"floorsq {args.command}: {exc}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"floorsq {args.command}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    manifest["wall_seconds"] = round(time.perf_counter() - t0, 3)
    return _emit(args, result, manifest, code)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
