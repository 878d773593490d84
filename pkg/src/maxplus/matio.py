"""Text format for matrices and the small parsers used by the command line.

A matrix file is::

    tmat 1
    <rows> <cols>
    <row of whitespace-separated entries>
    ...

Entries are decimals ("-1.5"), ratios ("-3/2") or integers; "-inf" is
accepted only when parsing in extended mode.  Serialization is canonical
(lowest-terms ratios, integers without a denominator), so parsing a
serialized matrix reproduces it byte for byte.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MatrixParseError
from .permutation import Permutation
from .semiring import NEG_INF, ExtMatrix, Matrix, Vector

__all__ = [
    "HEADER",
    "parse_matrix",
    "serialize_matrix",
    "load_matrix",
    "format_scalar",
    "format_vector",
    "parse_point",
    "parse_permutation",
]

HEADER = "tmat 1"


def format_scalar(x, decimal: bool = False) -> str:
    """Canonical rendering: "p/q" or "p"; float rendering behind ``decimal``."""
    if x is NEG_INF:
        return "-inf"
    if decimal and x.denominator != 1:
        return repr(float(x))
    return str(x)


def format_vector(x: Vector, decimal: bool = False, sep: str = " ") -> str:
    return sep.join(format_scalar(e, decimal) for e in x)


def _parse_entry(token: str, extended: bool, lineno: int):
    if token == "-inf":
        if not extended:
            raise MatrixParseError('"-inf" entries need extended mode', lineno)
        return NEG_INF
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MatrixParseError(f"bad entry {token!r}", lineno) from None


def parse_matrix(text: str, *, extended: bool = False) -> ExtMatrix:
    """Parse matrix text; returns a finite ``Matrix`` whenever possible.

    Raises ``MatrixParseError`` carrying the offending 1-based line number.
    """
    raw = text.splitlines()
    lines = [(i + 1, line.strip()) for i, line in enumerate(raw)]
    while lines and not lines[-1][1]:
        lines.pop()
    if not lines:
        raise MatrixParseError("empty input", 1)
    lineno, header = lines[0]
    if header != HEADER:
        raise MatrixParseError(f'expected header "{HEADER}", got {header!r}', lineno)
    if len(lines) < 2:
        raise MatrixParseError("missing dimensions line", lineno + 1)
    lineno, dims = lines[1]
    parts = dims.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixParseError(f"bad dimensions line {dims!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 1 or m < 1:
        raise MatrixParseError("dimensions must be positive", lineno)
    body = lines[2:]
    if len(body) != n:
        raise MatrixParseError(
            f"expected {n} rows, found {len(body)}", body[-1][0] if body else lineno
        )
    grid = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != m:
            raise MatrixParseError(f"expected {m} entries, found {len(tokens)}", lineno)
        grid.append([_parse_entry(t, extended, lineno) for t in tokens])
    if any(e is NEG_INF for row in grid for e in row):
        return ExtMatrix(grid)
    return Matrix(grid)


def serialize_matrix(mat: ExtMatrix, decimal: bool = False) -> str:
    lines = [HEADER, f"{mat.rows} {mat.cols}"]
    for row in mat.entries:
        lines.append(" ".join(format_scalar(e, decimal) for e in row))
    return "\n".join(lines) + "\n"


def load_matrix(path, *, extended: bool = False) -> ExtMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_matrix(text, extended=extended)


def parse_point(text: str) -> Vector:
    """Comma-separated rationals, e.g. "0,-3/2,1.5"."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise MatrixParseError(f"bad point {text!r}")
    try:
        return Vector(Fraction(t) for t in tokens)
    except (ValueError, ZeroDivisionError):
        raise MatrixParseError(f"bad point {text!r}") from None


def parse_permutation(text: str) -> Permutation:
    """One-line image list, 1-based, e.g. "1 3 2"."""
    tokens = text.split()
    if not all(t.isdigit() for t in tokens):
        raise MatrixParseError(f"bad permutation {text!r}")
    try:
        return Permutation(int(t) - 1 for t in tokens)
    except ValueError:
        raise MatrixParseError(f"bad permutation {text!r}") from None
