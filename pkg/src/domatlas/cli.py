"""Command-line interface: atlas, poly, verify, plotdata."""

from __future__ import annotations

import argparse
import sys

from .atlas import AtlasConfig, build_atlas, emit_root_plot_data, render, verify
from .errors import DomAtlasError, MalformedGraph6, NoConvergence
from .graph import parse_graph6
from .polynomial import poly_by_components
from .roots import DEFAULT_TOL, find_roots


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--order", type=int, default=6, metavar="N", help="maximum graph order")
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="root-finding tolerance")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domatlas",
        description="Domination polynomials and domination roots of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_atlas = sub.add_parser("atlas", help="build the full atlas")
    _add_common(p_atlas)
    p_atlas.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    p_poly = sub.add_parser("poly", help="polynomial and roots of given graph6 strings")
    p_poly.add_argument("graph6", nargs="*", help="graph6 strings (stdin if omitted)")
    p_poly.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    _add_common(p_verify)

    p_plot = sub.add_parser("plotdata", help="CSV of all roots in the complex plane")
    _add_common(p_plot)
    return parser


def _write_out(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _config(args, fmt: str = "csv") -> AtlasConfig:
    return AtlasConfig(
        max_order=args.order,
        connected_only=not args.all,
        fmt=fmt,
        tol=args.tol,
        jobs=args.jobs,
        out_path=args.out,
    )


def _cmd_atlas(args) -> int:
    cfg = _config(args, args.format)
    entries = build_atlas(cfg)
    _write_out(render(entries, cfg.fmt), args.out)
    return 0 if all(e.error is None for e in entries) else 1


def _cmd_poly(args) -> int:
    inputs = args.graph6 or [line.strip() for line in sys.stdin if line.strip()]
    status = 0
    for g6 in inputs:
        g = parse_graph6(g6)
        poly = poly_by_components(g)
        print(poly.to_text())
        try:
            print(f"roots: {find_roots(poly, tol=args.tol).to_text()}")
        except NoConvergence as exc:
            print(f"roots: ERROR {exc}")
            status = 1
    return status


def _cmd_verify(args) -> int:
    report = verify(_config(args))
    sys.stdout.write(report.to_text())
    return 0 if report.all_passed else 1


def _cmd_plotdata(args) -> int:
    cfg = _config(args)
    entries = build_atlas(cfg)
    _write_out(emit_root_plot_data(entries), args.out)
    return 0 if all(e.error is None for e in entries) else 1


def main(argv=None) -> int:
    args = _make_parser().parse_args(argv)
    handler = {
        "atlas": _cmd_atlas,
        "poly": _cmd_poly,
        "verify": _cmd_verify,
        "plotdata": _cmd_plotdata,
    }[args.command]
    try:
        return handler(args)
    except MalformedGraph6 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomAtlasError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
