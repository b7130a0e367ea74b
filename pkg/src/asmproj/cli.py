"""Command-line front end.

Exit codes: 0 success or true, 1 validation failure or false, 2 infeasible
construction, 3 parse or format error, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import formats
from .ashm import ashl, enumerate_ashms_order3, occurrence_profile
from .bijection import (
    asm_from_monotone,
    asm_from_partial_sum,
    monotone_from_asm,
    partial_sum,
)
from .core import (
    IntMatrix,
    validate_asm,
    validate_monotone,
    validate_row_increasing,
    weighted_projection,
)
from .enumeration import (
    count_asms,
    enumerate_asms,
    enumerate_majorized_vectors,
    enumerate_monotone,
    enumerate_row_increasing,
)
from .errors import (
    AsmProjError,
    LimitExceeded,
    NotMajorized,
    ParseError,
    ProjectionMismatch,
    SeamError,
)
from .galeryser import majorized_by
from .polytope import decompose_paired, decompose_tblocks, validate_polytope
from .synthesis import construct

EXIT_OK, EXIT_FALSE, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_USAGE = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _json_rows(rows) -> str:
    return json.dumps({"n": len(rows), "rows": [list(r) for r in rows]}) + "\n"


# -- subcommands -------------------------------------------------------------

def _load_triangle_or_matrix(kind: str, path: str):
    text = _read(path)
    if kind == "monotone":
        return validate_monotone(formats.read_triangle(text))
    if kind == "psm":
        return IntMatrix(formats.read_matrix(text))
    return validate_asm(formats.read_matrix(text))


def cmd_verify(args, out) -> int:
    text = _read(args.file)
    if args.kind == "asm":
        validate_asm(formats.read_matrix(text))
    elif args.kind == "triangle":
        validate_row_increasing(formats.read_triangle(text))
    elif args.kind == "monotone":
        validate_monotone(formats.read_triangle(text))
    elif args.kind == "polytope":
        validate_polytope(formats.read_rational_matrix(text))
    else:
        formats.read_ashm(text)
    out.write('{"valid": true}\n' if args.format == "json" else "valid\n")
    return EXIT_OK


def cmd_project(args, out) -> int:
    text = _read(args.file)
    if text.lstrip().startswith("{"):
        v = weighted_projection(formats.read_rational_matrix(text))
        cells = [formats.format_fraction(x) for x in v]
    else:
        cells = [str(x) for x in weighted_projection(formats.read_matrix(text))]
    if args.format == "json":
        out.write(json.dumps([int(c) if "/" not in c else c for c in cells]) + "\n")
    else:
        out.write(",".join(cells) + "\n")
    return EXIT_OK


def _trace_text(c) -> str:
    parts = ["# 01-matrix\n", formats.write_matrix(c.matrix01),
             "# triangle\n", formats.write_triangle(c.triangle),
             "# switches\n"]
    for s in c.steps:
        z = s.trapezoid
        parts.append(f"-- switch height={z.height} rows={z.top_row},{z.bottom_row} f={s.f}\n")
        parts.append(formats.write_triangle(s.triangle))
    parts += ["# monotone\n", formats.write_triangle(c.monotone),
              "# asm\n", formats.write_matrix(c.asm)]
    return "".join(parts)


def cmd_construct(args, out) -> int:
    c = construct(formats.parse_vector(args.projection))
    if args.format == "json":
        doc = {"projection": list(c.target), "asm": [list(r) for r in c.asm.rows]}
        if args.trace:
            doc["matrix01"] = [list(r) for r in c.matrix01.rows]
            doc["triangle"] = [list(r) for r in c.triangle.rows]
            doc["switches"] = [
                {"height": s.trapezoid.height, "rows": [s.trapezoid.top_row, s.trapezoid.bottom_row],
                 "f": s.f, "triangle": [list(r) for r in s.triangle.rows]}
                for s in c.steps
            ]
            doc["monotone"] = [list(r) for r in c.monotone.rows]
        out.write(json.dumps(doc) + "\n")
    elif args.trace:
        out.write(_trace_text(c))
    else:
        out.write(formats.write_matrix(c.asm))
    return EXIT_OK


def cmd_convert(args, out) -> int:
    src = _load_triangle_or_matrix(args.source, args.file)
    # normalise to an ASM first; every conversion goes through it
    if args.source == "psm":
        asm = asm_from_partial_sum(src)
    elif args.source == "monotone":
        asm = asm_from_monotone(src)
    else:
        asm = src
    if args.target == "asm":
        result = asm
    elif args.target == "psm":
        result = partial_sum(asm)
    else:
        result = monotone_from_asm(asm)
    if args.format == "json":
        out.write(_json_rows(result.rows))
    elif args.target == "monotone":
        out.write(formats.write_triangle(result))
    else:
        out.write(formats.write_matrix(result))
    return EXIT_OK


def cmd_majorize(args, out) -> int:
    x, y = formats.parse_vector(args.x), formats.parse_vector(args.y)
    ok = majorized_by(x, y)
    out.write(json.dumps(ok) + "\n")
    return EXIT_OK if ok else EXIT_FALSE


_GENERATORS = {
    "asm": (enumerate_asms, formats.write_matrix),
    "monotone": (enumerate_monotone, formats.write_triangle),
    "rit": (enumerate_row_increasing, formats.write_triangle),
    "vectors": (enumerate_majorized_vectors, lambda v: formats.format_vector(v) + "\n"),
}


def cmd_enumerate(args, out) -> int:
    gen, write = _GENERATORS[args.kind]
    if args.count_only:
        if args.kind == "asm":
            total = count_asms(args.order)
        else:
            total = sum(1 for _ in gen(args.order))
        out.write(json.dumps({"count": total}) + "\n" if args.format == "json" else f"{total}\n")
        return EXIT_OK
    first = True
    for obj in gen(args.order):
        if args.format == "json":
            rows = getattr(obj, "rows", None)
            out.write(json.dumps([list(r) for r in rows] if rows is not None else list(obj)) + "\n")
            continue
        if not first:
            out.write("\n")
        out.write(write(obj))
        first = False
    return EXIT_OK


def cmd_polytope(args, out) -> int:
    a = validate_polytope(formats.read_rational_matrix(_read(args.a)))
    b = validate_polytope(formats.read_rational_matrix(_read(args.b)))
    terms = decompose_paired(a, b) if args.paired else decompose_tblocks(a, b)
    out.write(formats.terms_to_json(terms) if args.format == "json" else formats.write_terms(terms))
    return EXIT_OK


def cmd_ashm(args, out) -> int:
    if args.ashm_command == "search3":
        p = occurrence_profile(args.value, (ashl(h) for h in enumerate_ashms_order3()))
        if args.format == "json":
            out.write(json.dumps({"value": p.value, "ashms": p.squares,
                                  "rows": list(p.rows), "columns": list(p.columns)}) + "\n")
        else:
            out.write(f"value {p.value}\nashms {p.squares}\n"
                      f"rows {' '.join(map(str, p.rows))}\n"
                      f"columns {' '.join(map(str, p.columns))}\n")
        return EXIT_OK
    h = formats.read_ashm(_read(args.file))
    if args.ashm_command == "ashl":
        l = ashl(h)
        out.write(_json_rows(l.rows) if args.format == "json" else formats.write_matrix(l))
    else:
        out.write(formats.write_ashm(h) if args.format == "json" else formats.write_grid(h))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output serialization (default: text)")

    p = _Parser(prog="asmproj", description="Alternating sign matrices and their weighted projections.",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="validate a file")
    s.add_argument("kind", choices=("asm", "triangle", "monotone", "polytope", "ashm"))
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("project", parents=[common], help="weighted projection of a matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("construct", parents=[common], help="build an ASM with a given projection")
    s.add_argument("--projection", required=True, metavar="CSV")
    s.add_argument("--trace", action="store_true", help="print every stage of the construction")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("convert", parents=[common], help="convert between asm, psm and monotone")
    s.add_argument("--from", dest="source", required=True, choices=("asm", "psm", "monotone"))
    s.add_argument("--to", dest="target", required=True, choices=("asm", "psm", "monotone"))
    s.add_argument("file")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("majorize", parents=[common], help="is X majorized by Y")
    s.add_argument("x", metavar="X")
    s.add_argument("y", metavar="Y")
    s.set_defaults(func=cmd_majorize)

    s = sub.add_parser("enumerate", parents=[common], help="list small objects exhaustively")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--kind", required=True, choices=tuple(_GENERATORS))
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("polytope", parents=[common], help="ASM polytope tools")
    psub = s.add_subparsers(dest="polytope_command", required=True, parser_class=_Parser)
    d = psub.add_parser("decompose", parents=[common], help="T-block decomposition of B - A")
    d.add_argument("--paired", action="store_true", help="opposite-depth pairs (needs equal projections)")
    d.add_argument("a", metavar="A")
    d.add_argument("b", metavar="B")
    d.set_defaults(func=cmd_polytope)

    s = sub.add_parser("ashm", parents=[common], help="alternating sign hypermatrix tools")
    asub = s.add_subparsers(dest="ashm_command", required=True, parser_class=_Parser)
    for name, text in (("ashl", "weighted plane sum"), ("grid", "grid notation")):
        a = asub.add_parser(name, parents=[common], help=text)
        a.add_argument("file")
        a.set_defaults(func=cmd_ashm)
    a = asub.add_parser("search3", parents=[common], help="occurrence maxima over all order-3 ASHLs")
    a.add_argument("--value", type=int, required=True)
    a.set_defaults(func=cmd_ashm)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except LimitExceeded as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (NotMajorized, ProjectionMismatch) as exc:
        err.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except AsmProjError as exc:
        err.write(f"invalid: {type(exc).__name__}: {exc}\n")
        if args.command == "verify":
            out.write('{"valid": false}\n' if args.format == "json" else "invalid\n")
        return EXIT_FALSE
    except SeamError as exc:
        err.write(f"internal check failed at {exc.seam}: {exc}\n")
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
