"""Command-line frontend.

Five subcommands: ``rzk`` (build and classify the surface over a
complex), ``free-rank`` (maximal freely-acting subgroup), ``f`` (bounds
or exact value of the maximal free rank at a genus), ``cover`` (build a
regular cover from a GF(2) matrix), ``figure`` (the bounds/envelope
table as CSV).

Primary output goes to stdout and is byte-deterministic for fixed
inputs; everything diagnostic goes to stderr. Exit codes: 0 success,
2 invalid input, 3 a resource cap was exceeded. The environment
variable INVOLAB_CELL_CAP overrides the cell-count build cap (an
integer bound on m).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import action, cover, fgenus, rzk, scomplex
from .errors import CapError, NotASurfaceError, ValidationError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3


def _boolean(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in {"true", "1", "yes"}:
        return True
    if lowered in {"false", "0", "no"}:
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _build_cap() -> int:
    raw = os.environ.get("INVOLAB_CELL_CAP")
    if raw is None:
        return rzk.DEFAULT_BUILD_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"INVOLAB_CELL_CAP must be an integer, got {raw!r}")


def _load_complex(args: argparse.Namespace) -> scomplex.SimplicialComplex:
    if (args.m is None) == (args.complex is None):
        raise ValidationError("give exactly one of --m and --complex")
    if args.m is not None:
        return scomplex.polygon_boundary(args.m)
    try:
        return scomplex.read_complex(args.complex)
    except OSError as exc:
        raise ValidationError(f"cannot read {args.complex}: {exc}")


def cmd_rzk(args: argparse.Namespace) -> int:
    K = _load_complex(args)
    C = rzk.build(K, cap=_build_cap())
    report = rzk.surface_report(C)
    if args.report == "json":
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key} = {value}")
    return EXIT_OK


def cmd_free_rank(args: argparse.Namespace) -> int:
    K = _load_complex(args)
    rank, witness = action.max_free_rank(K)
    if args.json:
        print(json.dumps({"rank": rank, "basis": witness.basis_vertex_lists()}))
        return EXIT_OK
    print(rank)
    if args.witness:
        for verts in witness.basis_vertex_lists():
            print(" ".join(str(v) for v in verts))
    return EXIT_OK


def cmd_f(args: argparse.Namespace) -> int:
    if args.g < 0:
        raise ValidationError(f"--g must be nonnegative, got {args.g}")
    if not args.exact:
        fv = fgenus.f_bounds(args.g)
        print(f"{fv.lower} {fv.upper}")
        return EXIT_OK
    fv = fgenus.f_exact(args.g)
    print(
        json.dumps(
            {
                "g": fv.g,
                "f_lower": fv.lower,
                "f_upper": fv.upper,
                "f_exact": fv.exact,
                "resolved": fv.resolved,
                "method": fv.method,
                "certificate": fv.certificate,
            }
        )
    )
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    base = cover.presentation(args.orientable, args.genus)
    try:
        with open(args.phi, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {args.phi}: {exc}")
    phi = cover.parse_phi(text, base.generator_count)
    built = cover.build_cover(base, phi)
    print(json.dumps(built.to_report()))
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    if args.gmax < 0:
        raise ValidationError(f"--gmax must be nonnegative, got {args.gmax}")
    if args.threads < 1:
        raise ValidationError(f"--threads must be positive, got {args.threads}")
    rows = fgenus.figure1_data(args.gmax, threads=args.threads)
    text = fgenus.figure_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValidationError(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involab",
        description="Surfaces with free 2-torus symmetry: cubical models, "
        "free ranks, covers, and the genus envelope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rzk", help="build the surface over a complex and report it")
    p.add_argument("--m", type=int, help="use the boundary of the m-gon")
    p.add_argument("--complex", help="read the complex from a text file")
    p.add_argument("--report", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_rzk)

    p = sub.add_parser("free-rank", help="maximal rank of a freely acting subgroup")
    p.add_argument("--m", type=int, help="use the boundary of the m-gon")
    p.add_argument("--complex", help="read the complex from a text file")
    p.add_argument("--witness", action="store_true", help="also print a basis")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_free_rank)

    p = sub.add_parser("f", help="bounds or exact value of the maximal free rank")
    p.add_argument("--g", type=int, required=True, help="orientable genus")
    p.add_argument("--exact", action="store_true", help="run the resolver")
    p.set_defaults(func=cmd_f)

    p = sub.add_parser("cover", help="build a regular (Z/2)^n cover")
    p.add_argument("--orientable", type=_boolean, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--phi", required=True, help="GF(2) matrix file, rows of bits")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("figure", help="emit the g, bounds, H(g) table as CSV")
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, NotASurfaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    raise SystemExit(main())
