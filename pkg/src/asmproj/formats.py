"""Readers and writers for the text and JSON file formats.

Matrix text:   first line ``n``, then ``n`` lines of ``n`` integers
               (``+`` and ``-`` are accepted for 1 and -1 on input).
Triangle text: first line ``n``, then row ``i`` as ``i`` integers.
Rational JSON: ``{"n": n, "rows": [["p/q" | "p" | int, ...], ...]}``.
ASHM JSON:     ``{"n": n, "planes": [plane_1, ..., plane_n]}``; plane ``k`` has weight ``k``.
"""

from __future__ import annotations

import json
import re
from collections.abc import Sequence
from fractions import Fraction

from .ashm import Ashm, grid_notation, parse_grid, validate_ashm
from .core import _as_rows
from .errors import ParseError
from .polytope import TBlock, TBlockTerm

_ALIASES = {"+": 1, "-": -1}


def _int_token(tok: str) -> int:
    if tok in _ALIASES:
        return _ALIASES[tok]
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}") from None


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            out.append(ln.split())
    return out


def _header(lines) -> int:
    if not lines or len(lines[0]) != 1:
        raise ParseError("first line must be the order n")
    n = _int_token(lines[0][0])
    if n < 1:
        raise ParseError(f"order must be positive, got {n}")
    return n


def read_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    lines = _content_lines(text)
    n = _header(lines)
    body = lines[1:]
    if len(body) != n or any(len(r) != n for r in body):
        raise ParseError(f"expected {n} rows of {n} entries")
    return tuple(tuple(_int_token(t) for t in r) for r in body)


def write_matrix(m) -> str:
    rows = _as_rows(m)
    return "\n".join([str(len(rows))] + [" ".join(str(x) for x in r) for r in rows]) + "\n"


def read_triangle(text: str) -> tuple[tuple[int, ...], ...]:
    lines = _content_lines(text)
    n = _header(lines)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} triangle rows, got {len(body)}")
    for i, r in enumerate(body, start=1):
        if len(r) != i:
            raise ParseError(f"triangle row {i} has {len(r)} entries")
    return tuple(tuple(_int_token(t) for t in r) for r in body)


def write_triangle(t) -> str:
    rows = _as_rows(t)
    return "\n".join([str(len(rows))] + [" ".join(str(x) for x in r) for r in rows]) + "\n"


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ParseError(f"not a comma-separated integer vector: {text!r}") from None


def format_vector(v: Sequence) -> str:
    return ",".join(str(x) for x in v)


def _fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {x!r}") from None
    raise ParseError(f"not a rational: {x!r}")


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    return doc


def read_rational_matrix(text: str) -> tuple[tuple[Fraction, ...], ...]:
    """Rational JSON document; a plain matrix text file is accepted too."""
    if not text.lstrip().startswith("{"):
        return tuple(tuple(Fraction(x) for x in r) for r in read_matrix(text))
    doc = _load_json(text)
    rows = doc.get("rows")
    if not isinstance(rows, list):
        raise ParseError("missing 'rows'")
    n = doc.get("n", len(rows))
    if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"expected {n} rows of {n} entries")
    return tuple(tuple(_fraction(x) for x in r) for r in rows)


def format_fraction(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_rational_matrix(m) -> str:
    rows = _as_rows(m)
    doc = {"n": len(rows), "rows": [[format_fraction(x) for x in r] for r in rows]}
    return json.dumps(doc) + "\n"


def read_ashm(text: str) -> Ashm:
    """ASHM JSON document, or grid notation text."""
    if not text.lstrip().startswith("{"):
        return parse_grid(text)
    doc = _load_json(text)
    planes = doc.get("planes")
    if not isinstance(planes, list):
        raise ParseError("missing 'planes'")
    if "n" in doc and doc["n"] != len(planes):
        raise ParseError(f"'n' is {doc['n']} but there are {len(planes)} planes")
    return validate_ashm(planes)


def write_ashm(a: Ashm) -> str:
    doc = {"n": a.n, "planes": [[list(r) for r in p] for p in a.planes]}
    return json.dumps(doc) + "\n"


def write_grid(a: Ashm) -> str:
    return grid_notation(a)


def to_json(obj) -> str:
    """JSON rendering used by ``--format json``."""
    rows = getattr(obj, "rows", None)
    if rows is not None:
        return json.dumps({"n": len(rows), "rows": [list(r) for r in rows]}) + "\n"
    return json.dumps(list(obj)) + "\n"


# -- T-block term lists ------------------------------------------------------

_BLOCK = re.compile(r"([TS])\((\d+),(\d+);(\d+),(\d+),([+-])\)$")


def _parse_block(tok: str, letter: str) -> TBlock:
    m = _BLOCK.match(tok)
    if m is None or m.group(1) != letter:
        raise ParseError(f"bad block {tok!r}")
    i1, j1, i2, j2 = (int(m.group(k)) for k in range(2, 6))
    return TBlock(i1, j1, i2, j2, 1 if m.group(6) == "+" else -1)


def write_terms(terms) -> str:
    """One line per term: ``c  T(i1,j1;i2,j2,s)`` plus ``  S(...)`` for paired terms."""
    return "".join(f"{t}\n" for t in terms)


def read_terms(text: str) -> list[TBlockTerm]:
    terms = []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts:
            continue
        if len(parts) not in (2, 3):
            raise ParseError(f"bad term line {ln!r}")
        c = _fraction(parts[0])
        block = _parse_block(parts[1], "T")
        partner = _parse_block(parts[2], "S") if len(parts) == 3 else None
        terms.append(TBlockTerm(c, block, partner))
    return terms


def _block_doc(b: TBlock) -> list[int]:
    return [b.i1, b.j1, b.i2, b.j2, b.sign]


def terms_to_json(terms) -> str:
    doc = []
    for t in terms:
        item = {"coefficient": format_fraction(t.coefficient), "block": _block_doc(t.block)}
        if t.partner is not None:
            item["partner"] = _block_doc(t.partner)
        doc.append(item)
    return json.dumps(doc) + "\n"


def terms_from_json(text: str) -> list[TBlockTerm]:
    try:
        doc = json.loads(text)
        out = []
        for item in doc:
            partner = item.get("partner")
            out.append(TBlockTerm(
                _fraction(item["coefficient"]),
                TBlock(*item["block"]),
                TBlock(*partner) if partner is not None else None,
            ))
        return out
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"bad term document: {exc}") from None
