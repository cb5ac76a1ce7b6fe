"""Command-line front end: ``pqbezier basis|curve|surface|operator|render``.

Exit status is 0 on success, 1 for bad input data and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import curve as crv
from . import surface as srf
from .basis import basis_rows
from .errors import DegenerateError, DomainError
from .operators import CORPUS, REFERENCE_SCHEDULE, convergence_table, fixed_schedule
from .pq_arith import PQParams
from .render import render_svg
from .scene import DocumentError, SceneDocument, dumps_document, load_document

EXIT_DATA = 1


def _num(x) -> str:
    # shortest repr that round-trips
    return repr(float(x))


def _csv(rows, out):
    for row in rows:
        out.write(",".join(row) + "\n")


def _positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not np.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text!r}")
    return value


def _unit(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1]: {text!r}")
    return value


def _count(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}: {text!r}")
        return value

    return parse


def _emit_document(doc: SceneDocument, out_path, stdout):
    text = dumps_document(doc)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def cmd_basis(args, stdout):
    pq = PQParams(args.p, args.q)
    ts = np.linspace(0.0, 1.0, args.grid)
    rows = basis_rows(args.n, pq, ts)
    header = ["t"] + [f"b{k}" for k in range(args.n + 1)] + ["sum"]
    body = ([_num(t)] + [_num(b) for b in row] + [_num(row.sum())] for t, row in zip(ts, rows))
    _csv([header, *body], stdout)


def cmd_curve(args, stdout):
    doc = load_document(args.input)
    poly = doc.polygon()
    axes = ["x", "y", "z"][: poly.dim]
    if args.action == "eval":
        stdout.write(",".join(_num(c) for c in crv.eval_rational(poly, args.t)) + "\n")
    elif args.action == "sample":
        samples = args.samples or doc.style.get("samples", 101)
        ts = np.linspace(0.0, 1.0, samples)
        pts = crv.sample(poly, ts)
        _csv([["t", *axes], *([_num(t), *map(_num, pt)] for t, pt in zip(ts, pts))], stdout)
    elif args.action == "elevate":
        _emit_document(SceneDocument.from_polygon(crv.elevate_repeated(poly, args.times), doc.style),
                       args.out, stdout)
    elif args.action == "casteljau":
        trace = crv.decasteljau(poly, args.t)
        for r, level in enumerate(trace.levels):
            cells = ("(" + ", ".join(_num(c) for c in pt) + ")" for pt in level)
            stdout.write("  " * r + "  ".join(cells) + "\n")


def cmd_surface(args, stdout):
    doc = load_document(args.input)
    net = doc.net()
    if args.action == "eval":
        if args.u is None or args.v is None:
            raise _UsageError("surface eval needs --u and --v")
        stdout.write(",".join(_num(c) for c in srf.eval_surface(net, args.u, args.v)) + "\n")
    elif args.action == "sample":
        g = np.linspace(0.0, 1.0, args.grid)
        pts = srf.sample_surface(net, g, g)
        rows = [["u", "v", "x", "y", "z"]]
        for a, u in enumerate(g):
            for b, v in enumerate(g):
                rows.append([_num(u), _num(v), *map(_num, pts[a, b])])
        _csv(rows, stdout)
    elif args.action == "elevate":
        for _ in range(args.times):
            net = srf.elevate_surface(net)
        _emit_document(SceneDocument.from_net(net, doc.style), args.out, stdout)
    elif args.action == "iso":
        if (args.u is None) == (args.v is None):
            raise _UsageError("surface iso needs exactly one of --u or --v")
        if args.v is not None:
            poly = srf.iso_curve(net, srf.IsoDirection.V_FIXED, args.v)
        else:
            poly = srf.iso_curve(net, srf.IsoDirection.U_FIXED, args.u)
        _emit_document(SceneDocument.from_polygon(poly), args.out, stdout)


def cmd_operator(args, stdout):
    if any(b <= a for a, b in zip(args.n, args.n[1:])):
        raise _UsageError("--n values must be strictly ascending")
    if args.schedule is not None and (args.p is not None or args.q is not None):
        raise _UsageError("use either --schedule or --p/--q, not both")
    if args.schedule is None and (args.p is None or args.q is None):
        raise _UsageError("need --schedule or both --p and --q")
    schedule = REFERENCE_SCHEDULE if args.schedule else fixed_schedule(args.p, args.q)
    records = convergence_table(CORPUS[args.f], schedule, args.n, args.grid)
    rows = [["n", "p_n", "q_n", "sup_error"]]
    rows += [[str(r.n), _num(r.p), _num(r.q), _num(r.sup_error)] for r in records]
    _csv(rows, stdout)


def cmd_render(args, stdout):
    doc = load_document(args.input)
    poly = doc.polygon()
    if poly.dim != 2:
        raise DomainError("render supports 2D curves only")
    samples = args.samples or doc.style.get("samples", 256)
    svg = render_svg(poly, samples=samples, show_hull=args.show_hull,
                     stroke_width=doc.style.get("stroke_width", 1.5))
    Path(args.out).write_text(svg, encoding="utf-8")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqbezier",
        description="Lupas (p,q)-Bezier curves, surfaces and Bernstein operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="tabulate the degree-n basis as CSV")
    b.add_argument("--n", type=_count(0), required=True)
    b.add_argument("--p", type=_positive, required=True)
    b.add_argument("--q", type=_positive, required=True)
    b.add_argument("--grid", type=_count(2), default=101)
    b.set_defaults(func=cmd_basis)

    c = sub.add_parser("curve", help="work with a curve document")
    c.add_argument("action", choices=["eval", "sample", "elevate", "casteljau"])
    c.add_argument("input", help="JSON scene document (kind=curve)")
    c.add_argument("--t", type=_unit, default=0.5)
    c.add_argument("--samples", type=_count(2))
    c.add_argument("--times", type=_count(1), default=1)
    c.add_argument("--out", help="write the resulting document here instead of stdout")
    c.set_defaults(func=cmd_curve)

    s = sub.add_parser("surface", help="work with a surface document")
    s.add_argument("action", choices=["eval", "sample", "elevate", "iso"])
    s.add_argument("input", help="JSON scene document (kind=surface)")
    s.add_argument("--u", type=_unit)
    s.add_argument("--v", type=_unit)
    s.add_argument("--grid", type=_count(2), default=21)
    s.add_argument("--times", type=_count(1), default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_surface)

    o = sub.add_parser("operator", help="sup-norm convergence table of the Lupas operator")
    o.add_argument("--f", required=True, choices=sorted(CORPUS))
    o.add_argument("--schedule", choices=["reference"])
    o.add_argument("--p", type=_positive)
    o.add_argument("--q", type=_positive)
    o.add_argument("--n", type=_count(1), nargs="+", default=[8, 16, 32, 64])
    o.add_argument("--grid", type=_count(2), default=201)
    o.set_defaults(func=cmd_operator)

    r = sub.add_parser("render", help="render a planar curve to SVG")
    r.add_argument("input")
    r.add_argument("--out", required=True)
    r.add_argument("--samples", type=_count(2))
    r.add_argument("--show-hull", action="store_true")
    r.set_defaults(func=cmd_render)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, stdout)
    except _UsageError as exc:
        parser.print_usage(stderr)
        stderr.write(f"pqbezier: error: {exc}\n")
        return 2
    except (DocumentError, DomainError, DegenerateError, OverflowError) as exc:
        stderr.write(f"pqbezier: {exc}\n")
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())
