"""Command-line front end.

Subcommands: check (balance/uniformity verdicts), canon (canonical form),
roots (closure parameters, solver vs closed form), gen (write a
configuration), search (exhaustive grid enumeration), render (SVG figure).

Exit codes: 0 the property holds, 1 the property fails and the report carries
a certificate, 2 input or usage error. Reports are canonical JSON on stdout
(or --out); elapsed time goes to stderr, and into the report only under
--timing so that default output stays byte-deterministic.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from typing import Optional

from .balance import even_m_witness, is_balanced, is_uniform, step_constants
from .canonical import CanonicalForm, canonicalize
from .errors import (
    BalcfgError,
    BudgetExceeded,
    CertificateError,
    ConfigFileError,
    DuplicateArgument,
    NoGridMatch,
    NotBalanced,
    NotNormalized,
    NotUniform,
    ResidualTooLarge,
    RootCountMismatch,
)
from .geometry import Configuration, roots_of_unity
from .render import render_svg
from .search import SearchSpec, enumerate_balanced, random_invertible
from .sequences import model_configuration, symbolic_sequences, t_grid, wn_equation_roots
from .serialization import dumps_canonical, load_config, serialize_config

CANON_CERTIFICATES = (
    NotBalanced,
    NotUniform,
    NoGridMatch,
    ResidualTooLarge,
    NotNormalized,
    DuplicateArgument,
)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _emit_report(report: dict, args) -> None:
    if getattr(args, "timing", False):
        report["elapsed_ms"] = (time.perf_counter() - args.t0) * 1000.0
    _write_output(dumps_canonical(report) + "\n", args.out)


def _cmd_check(args) -> int:
    cfg = load_config(args.path)
    report = {
        "command": "check",
        "input": os.path.basename(args.path),
        "m": cfg.m,
        "mode": cfg.mode,
        "tol": args.tol,
        "balanced": None,
        "balance_witness": None,
        "uniform": None,
        "uniform_witness": None,
        "even_m_witness": None,
        "step_constants": None,
    }
    bal = is_balanced(cfg, args.tol)
    report["balanced"] = bal.balanced
    if bal.witness is not None:
        index, value = bal.witness
        report["balance_witness"] = {"index": index, "value": _jsonable(value)}
    uniform, pair = is_uniform(cfg, args.tol)
    report["uniform"] = uniform
    if pair is not None:
        report["uniform_witness"] = list(pair)
    if bal.balanced and cfg.m % 2 == 0:
        report["even_m_witness"] = even_m_witness(cfg, args.tol)
    if bal.balanced and uniform and cfg.m % 2 == 1 and cfg.m >= 3:
        constants = step_constants(cfg, args.tol)
        report["step_constants"] = {
            "A1": _jsonable(constants.A1),
            "An": _jsonable(constants.An),
        }
    _emit_report(report, args)
    return 0 if bal.balanced else 1


def _canon_report(args, cfg: Configuration, form: CanonicalForm) -> dict:
    return {
        "command": "canon",
        "input": os.path.basename(args.path),
        "m": cfg.m,
        "mode": cfg.mode,
        "ok": True,
        "t": form.t,
        "k": form.k,
        "residual": form.residual,
        "map": [list(row) for row in (_float_rows(form))],
        "index_map": list(form.index_map),
        "error": None,
        "witness": None,
    }


def _float_rows(form: CanonicalForm):
    (a, b), (c, d) = form.g.rows()
    return ((float(a), float(b)), (float(c), float(d)))


def _cmd_canon(args) -> int:
    cfg = load_config(args.path)
    try:
        form = canonicalize(cfg, args.tol if args.tol is not None else 1e-8)
    except CANON_CERTIFICATES as exc:
        report = {
            "command": "canon",
            "input": os.path.basename(args.path),
            "m": cfg.m,
            "mode": cfg.mode,
            "ok": False,
            "t": None,
            "k": None,
            "residual": None,
            "map": None,
            "index_map": None,
            "error": type(exc).__name__,
            "witness": _jsonable(getattr(exc, "witness", None)),
        }
        _emit_report(report, args)
        return 1
    _emit_report(_canon_report(args, cfg, form), args)
    return 0


def _cmd_roots(args) -> int:
    if (args.n is None) == (args.m is None):
        print("roots: give exactly one of --n or --m", file=sys.stderr)
        return 2
    if args.n is not None:
        if args.n < 1:
            print(f"roots: --n must be >= 1, got {args.n}", file=sys.stderr)
            return 2
        n, m = args.n, 2 * args.n + 1
    else:
        if args.m < 3 or args.m % 2 == 0:
            print(f"roots: --m must be odd and >= 3, got {args.m}", file=sys.stderr)
            return 2
        m, n = args.m, (args.m - 1) // 2
    solved = wn_equation_roots(n)
    grid = t_grid(m)
    deviation = max(
        abs(a - b) for a, b in zip(solved.values, grid.values)
    )
    _, ws = symbolic_sequences(n)
    report = {
        "command": "roots",
        "n": n,
        "m": m,
        "solver_roots": list(solved.values),
        "grid": list(grid.values),
        "max_deviation": deviation,
        "wn_x_coefficients": list(ws[n].x),
        "wn_y_coefficients": list(ws[n].y),
    }
    _emit_report(report, args)
    return 0


def _cmd_gen(args) -> int:
    if args.m < 1 or args.m % 2 == 0:
        print(f"gen: --m must be odd and >= 1, got {args.m}", file=sys.stderr)
        return 2
    if args.k is not None:
        cfg = model_configuration(args.m, args.k)
    else:
        cfg = Configuration(list(roots_of_unity(args.m).vectors))
    if args.seed is not None:
        cfg = random_invertible(args.seed).apply_configuration(cfg)
    if args.format == "svg":
        _write_output(render_svg(cfg), args.out)
    else:
        _write_output(serialize_config(cfg), args.out)
    return 0


def _cmd_search(args) -> int:
    try:
        coords = tuple(Fraction(part.strip()) for part in args.coords.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        print(f"search: bad --coords: {exc}", file=sys.stderr)
        return 2
    spec = SearchSpec(m=args.m, coordinate_set=coords, require_uniform=args.uniform)
    hits = enumerate_balanced(spec)
    uniform_count = sum(1 for cfg in hits if is_uniform(cfg)[0])
    files = None
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        files = []
        for idx, cfg in enumerate(hits):
            name = f"balanced_{idx:04d}.json"
            with open(os.path.join(args.out, name), "w", encoding="utf-8", newline="\n") as fh:
                fh.write(serialize_config(cfg))
            files.append(name)
    summary = {
        "command": "search",
        "m": args.m,
        "coords": [str(x) for x in spec.coordinate_set],
        "require_uniform": args.uniform,
        "count": len(hits),
        "uniform_count": uniform_count,
        "files": files,
    }
    text = dumps_canonical(summary) + "\n"
    sys.stdout.write(text)
    if args.out is not None:
        with open(os.path.join(args.out, "summary.json"), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def _cmd_render(args) -> int:
    cfg = load_config(args.path)
    if args.format == "json":
        _write_output(serialize_config(cfg), args.out)
    else:
        _write_output(render_svg(cfg), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balcfg",
        description="Balanced plane vector configurations: verdicts, canonical "
        "forms, closure-parameter grids, generators, and SVG figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="balance/uniformity verdicts for a configuration file")
    check.add_argument("path")
    check.add_argument("--tol", type=float, default=None, help="absolute determinant tolerance")
    check.add_argument("--out", default=None, help="write the report here instead of stdout")
    check.add_argument("--timing", action="store_true", help="embed elapsed time in the report")
    check.set_defaults(func=_cmd_check)

    canon = sub.add_parser("canon", help="canonical map onto the roots of unity")
    canon.add_argument("path")
    canon.add_argument("--tol", type=float, default=None, help="residual tolerance (default 1e-8)")
    canon.add_argument("--out", default=None)
    canon.add_argument("--timing", action="store_true")
    canon.set_defaults(func=_cmd_canon)

    roots = sub.add_parser("roots", help="closure parameters: certified solver vs closed form")
    roots.add_argument("--n", type=int, default=None)
    roots.add_argument("--m", type=int, default=None)
    roots.add_argument("--out", default=None)
    roots.add_argument("--timing", action="store_true")
    roots.set_defaults(func=_cmd_roots)

    gen = sub.add_parser("gen", help="write a configuration file")
    gen.add_argument("--m", type=int, required=True, help="configuration size (odd)")
    gen.add_argument("--k", type=int, default=None, help="emit the model at grid index k")
    gen.add_argument("--seed", type=int, default=None, help="apply a seeded invertible map")
    gen.add_argument("--out", default=None)
    gen.add_argument("--format", choices=("json", "svg"), default="json")
    gen.set_defaults(func=_cmd_gen)

    search = sub.add_parser("search", help="exhaustive balanced-configuration search on a grid")
    search.add_argument("--m", type=int, required=True)
    search.add_argument("--coords", required=True, help="comma-separated exact coordinates")
    search.add_argument("--uniform", action="store_true", help="keep only uniform hits")
    search.add_argument("--out", default=None, help="directory for hit files and summary.json")
    search.set_defaults(func=_cmd_search)

    render = sub.add_parser("render", help="render a configuration file")
    render.add_argument("path")
    render.add_argument("--out", default=None)
    render.add_argument("--format", choices=("svg", "json"), default="svg")
    render.set_defaults(func=_cmd_render)

    return parser


def _fuse_coords(argv):
    # argparse mistakes "-1,0,1" for an option; pass the value through "="
    fused = []
    skip = False
    for pos, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--coords" and pos + 1 < len(argv):
            fused.append(f"--coords={argv[pos + 1]}")
            skip = True
        else:
            fused.append(token)
    return fused


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_fuse_coords(list(argv)))
    args.t0 = time.perf_counter()
    try:
        code = args.func(args)
    except ConfigFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RootCountMismatch, CertificateError) as exc:
        print(f"certificate: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (BalcfgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - args.t0) * 1000.0
    print(f"elapsed_ms={elapsed_ms:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
