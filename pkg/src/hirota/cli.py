"""``hirota`` command line.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 a
verification check failed, 5 a figure missed its caption value.
Human-readable messages go to stderr; ``--json`` prints machine output on
stdout.
"""

import argparse
import ast
import math
import operator
import os
import sys
import time

import numpy as np

from . import io as hio
from .closedform import rogue_max
from .darboux import iterated_max_step, peak_tuned_constants
from .errors import HirotaError, ValidationError
from .figures import CAPTIONS, FIGURES, get_figure
from .scattering import TruncatedPotential, locate_eigenvalues, scattering_coeffs
from .seed import CTilde
from .solutions import FAMILIES, Grid, SolutionSpec, evaluate_grid, grid_max
from .spectral import SHEETS, Params, classify_region, eval_spectral
from .verify import CHECKS, check_lax, check_residual, run_checks

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VERIFY, EXIT_CAPTION = 0, 2, 3, 4, 5

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.USub: operator.neg, ast.UAdd: operator.pos}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left), _eval(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.operand))
    raise ValueError("unsupported expression")


def parse_number(text):
    """Numbers like ``0.5``, ``5/12``, ``pi/2`` or ``1+0.9i``."""
    s = text.strip().replace("i", "j").replace("pj", "pi")
    try:
        return _eval(ast.parse(s, mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def real(text):
    x = parse_number(text)
    if isinstance(x, complex):
        raise argparse.ArgumentTypeError(f"expected a real number: {text!r}")
    return float(x)


def number_list(text):
    return [parse_number(p) for p in text.split(",") if p.strip()]


def _add_params(p, defaults=True):
    g = p.add_argument_group("equation parameters")
    g.add_argument("--a", type=real, default=1.0 if defaults else None)
    g.add_argument("--b", type=real, default=0.5 if defaults else None)
    g.add_argument("--A", type=real, default=5 / 12 if defaults else None)
    g.add_argument("--B", type=real, default=0.0 if defaults else None)


def _params(args):
    return Params(a=args.a, b=args.b, A=args.A, B=args.B)


def _add_spec_args(p):
    p.add_argument("--spec", help="solution spec JSON file")
    p.add_argument("--family", choices=FAMILIES)
    _add_params(p)
    p.add_argument("--z", action="append", default=[], type=parse_number,
                   help="spectral point (repeatable)")
    p.add_argument("--c", action="append", default=[], type=parse_number,
                   help="translation constant for the matching --z")
    p.add_argument("--peak-tuned", action="store_true")
    p.add_argument("--order", type=int, default=0)
    p.add_argument("--c-tilde-eta", type=number_list, default=(),
                   help="coefficients of Q in c~ = eta Q(z - z1)")
    p.add_argument("--grid", type=number_list,
                   help="n_min,n_max,t_min,t_max,t_steps")
    p.add_argument("--sheet", choices=SHEETS, default="principal")


def _spec_from_args(args):
    if args.spec:
        if args.family:
            raise ValidationError("give either --spec or --family, not both", field="family")
        return SolutionSpec.from_dict(hio.read_json(args.spec))
    if not args.family:
        raise ValidationError("missing: pass --spec FILE or --family", field="family")
    cs = list(args.c) + [0] * (len(args.z) - len(args.c))
    if len(cs) > len(args.z):
        raise ValidationError("more --c than --z values", field="c")
    grid = Grid()
    if args.grid:
        if len(args.grid) != 5:
            raise ValidationError("expected n_min,n_max,t_min,t_max,t_steps", field="grid")
        grid = Grid(*args.grid)
    return SolutionSpec(
        family=args.family, params=_params(args), points=tuple(zip(args.z, cs)),
        order=args.order, c_tilde=CTilde(eta_series=tuple(args.c_tilde_eta)), grid=grid,
        sheet=args.sheet, peak_tuned=args.peak_tuned)


def _emit(args, payload, text):
    if getattr(args, "json", False):
        print(hio.dumps(payload))
    else:
        print(text)


# commands

def cmd_solution(args):
    spec = _spec_from_args(args)
    start = time.perf_counter()
    grid = evaluate_grid(spec)
    runtime = time.perf_counter() - start
    peak, n, t = grid_max(grid)
    report = {"spec": spec.to_dict(), "max": {"value": peak, "n": n, "t": t},
              "runtime_s": runtime}
    hio.write_csv(grid, args.out + ".csv")
    hio.write_json(report, args.out + ".json")
    if args.svg:
        hio.write_svg(grid, args.out + ".svg", title=f"|v|, {spec.family}")
    _emit(args, report, f"max |v| = {peak:.6f} at n = {n}, t = {t:.4g}; wrote {args.out}.csv")
    return EXIT_OK


def cmd_verify(args):
    names = [c for c in CHECKS if getattr(args, c)] or list(CHECKS)
    if args.csv:
        if args.spec or args.family:
            raise ValidationError("--csv excludes --spec/--family", field="csv")
        grid = hio.read_csv(args.csv)
        p = _params(args)
        results = []
        for name in names:
            if name == "residual":
                results.append(check_residual(grid, p, rogue=args.rogue))
            elif name == "lax":
                results.append(check_lax(grid, p))
            else:
                print(f"note: {name} needs an exact solution; skipped for CSV input",
                      file=sys.stderr)
        source = {"csv": args.csv}
    else:
        spec = _spec_from_args(args)
        results = run_checks(spec, names)
        source = {"spec": spec.to_dict()}
    report = {"source": source, "checks": [r.to_dict() for r in results],
              "pass": all(r.passed for r in results)}
    print(hio.dumps(report))
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _caption_table():
    rows = []
    for fid in CAPTIONS:
        fig = FIGURES[fid]
        _, rep = fig.run()
        rows.append({"figure": fid, "caption": fig.caption, "recursion": fig.predicted_max(),
                     "grid": rep["max"], "tolerance": fig.tolerance, "pass": rep["pass"]})
    return rows


def cmd_maxamp(args):
    if args.paper_table:
        rows = _caption_table()
        lines = [f"{'figure':8}{'caption':>9}{'recursion':>14}{'grid':>14}  pass"]
        lines += [f"{r['figure']:8}{r['caption']:>9}{r['recursion']:>14.6f}{r['grid']:>14.6f}"
                  f"  {r['pass']}" for r in rows]
        _emit(args, {"captions": rows}, "\n".join(lines))
        return EXIT_OK if all(r["pass"] for r in rows) else EXIT_CAPTION
    if args.A is None or args.A <= 0:
        raise ValidationError("a positive --A is required", field="A")
    if bool(args.zs) == bool(args.order):
        raise ValidationError("give exactly one of --zs or --order", field="zs")
    if args.order:
        if args.order < 1:
            raise ValidationError("order must be >= 1", field="order")
        Ms = [rogue_max(k, args.A) for k in range(1, args.order + 1)]
        payload = {"A": args.A, "order": args.order, "M": Ms}
        text = "\n".join(f"M{k} = {m:.6f}" for k, m in enumerate(Ms, 1))
        _emit(args, payload, text)
        return EXIT_OK
    for i, z in enumerate(args.zs):
        if abs(z) <= 1:
            raise ValidationError(f"|z| must exceed 1, got {z}", field=f"zs[{i}]")
    p = Params(a=1.0, b=0.0, A=args.A, B=0.0)
    cs, _ = peak_tuned_constants(args.zs, p)
    Ms, M = [], args.A
    for z in args.zs:
        M = iterated_max_step(M, z)
        Ms.append(M)
    payload = {"A": args.A, "zs": [complex(z) for z in args.zs], "M": Ms,
               "c": [complex(c) for c in cs]}
    text = "\n".join(f"M{k} = {m:.6f}   c{k} = {complex(c):.6f}"
                     for k, (m, c) in enumerate(zip(Ms, cs), 1))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_figure(args):
    ids = sorted(FIGURES) if args.id == ["all"] else args.id
    figs = [get_figure(i) for i in ids]
    os.makedirs(args.out_dir, exist_ok=True)
    reports, status = [], EXIT_OK
    for fig in figs:
        grid, rep = fig.run()
        base = os.path.join(args.out_dir, fig.id)
        rep["spec"] = fig.spec.to_dict()
        hio.write_csv(grid, base + ".csv")
        hio.write_svg(grid, base + ".svg", title=f"|v|, {fig.id}")
        hio.write_json(rep, base + ".json")
        reports.append(rep)
        verdict = {True: "pass", False: "FAIL", None: "no caption"}[rep.get("pass")]
        cap = "" if fig.caption is None else f" vs caption {fig.caption} (+-{fig.tolerance})"
        print(f"{fig.id}: max {rep['max']:.4f}{cap}: {verdict}", file=sys.stderr)
        if rep.get("pass") is False:
            status = EXIT_CAPTION
    if args.json:
        print(hio.dumps(reports))
    return status


def cmd_spectral(args):
    p = _params(args)
    rows = []
    for z in args.z:
        s = eval_spectral(complex(z), p, sheet=args.sheet, side=args.side)
        rows.append({"z": s.z, "region": classify_region(z, p).value, "zeta": s.zeta,
                     "xi": s.xi, "omega": s.omega, "delta": s.delta, "D": s.D, "eta": s.eta})
    text = "\n".join(
        f"z = {r['z']:.6g} [{r['region']}]: zeta = {r['zeta']:.10g}, xi = {r['xi']:.10g}, "
        f"omega = {r['omega']:.10g}" for r in rows)
    _emit(args, {"params": p.to_dict(), "sheet": args.sheet, "points": rows}, text)
    return EXIT_OK


def _potential(args):
    if args.csv:
        grid = hio.read_csv(args.csv)
        i = int(np.argmin(np.abs(grid.ts - args.t)))
        return TruncatedPotential(int(grid.ns[0]), grid.values[i], _params(args))
    spec = _spec_from_args(args)
    L = args.window
    return TruncatedPotential(-L, spec.evaluator()(np.arange(-L, L + 1), args.t), spec.params)


def cmd_scatter(args):
    pot = _potential(args)
    payload = {"n_min": pot.n_min, "n_max": pot.n_max, "phases": list(pot.phases)}
    lines = []
    if args.at:
        data = []
        for z in args.at:
            d = scattering_coeffs(pot, z, side=args.side)
            data.append({"z": d.z, "a": d.a_coeff, "b": d.b_coeff, "reflection": d.reflection,
                         "det_S": d.det_S, "gamma_plus": d.gamma_plus})
            lines.append(f"z = {d.z:.6g}: a = {d.a_coeff:.10g}, b = {d.b_coeff:.6g}")
        payload["coefficients"] = data
    if args.eigenvalues or not args.at:
        lo, hi = args.annulus
        found = locate_eigenvalues(pot, (lo, hi))
        payload["eigenvalues"] = found
        lines.append("eigenvalues: " + (", ".join(f"{z:.10g}" for z in found) or "none"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hirota", description="Exact solutions of the focusing discrete Hirota "
        "equation on a nonzero background.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solution", help="evaluate a solution on a grid")
    _add_spec_args(p)
    p.add_argument("--out", required=True, help="output prefix for .csv/.json/.svg")
    p.add_argument("--svg", action="store_true", help="also write an |v| heatmap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solution)

    p = sub.add_parser("verify", help="check that a field solves the equation")
    _add_spec_args(p)
    p.add_argument("--csv", help="grid CSV with five-point time stencils (step 1e-3)")
    p.add_argument("--rogue", action="store_true", help="use the rogue-wave threshold for CSV")
    for c in CHECKS:
        p.add_argument(f"--{c}", action="store_true")
    p.add_argument("--json", action="store_true", help="accepted; the report is JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maxamp", help="peak heights from the amplitude recursions")
    p.add_argument("--A", type=real)
    p.add_argument("--zs", type=number_list)
    p.add_argument("--order", type=int)
    p.add_argument("--paper-table", action="store_true",
                   help="the twelve captioned maxima next to computed values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_maxamp)

    p = sub.add_parser("figure", help="reproduce a figure dataset")
    p.add_argument("id", nargs="+", help=f"figure id ({', '.join(sorted(FIGURES))}) or all")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("spectral", help="spectral scalars at points z")
    _add_params(p)
    p.add_argument("--z", action="append", required=True, type=parse_number)
    p.add_argument("--sheet", choices=SHEETS, default="principal")
    p.add_argument("--side", choices=("+", "-"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("scatter", help="scattering data of a truncated field")
    _add_spec_args(p)
    p.add_argument("--csv", help="grid CSV; the row nearest --t is used")
    p.add_argument("--t", type=real, default=0.0)
    p.add_argument("--window", type=int, default=40, help="half-width for --spec input")
    p.add_argument("--at", action="append", default=[], type=parse_number,
                   help="evaluate a and b at this z (repeatable)")
    p.add_argument("--eigenvalues", action="store_true")
    p.add_argument("--annulus", type=number_list, default=[1.55, 4.0])
    p.add_argument("--side", choices=("+", "-"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scatter)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HirotaError as exc:
        print(f"numerical failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
