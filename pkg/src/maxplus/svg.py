"""Deterministic SVG pictures of projectivized polytropes.

3x3 strongly regular idempotents render as their projectivized polygon
with generator dots and an origin cross; 2x2 idempotents render as the
band between two slope-one boundary lines in the affine plane.  All
geometry is computed exactly and formatted with a fixed rule, so the
output bytes depend only on the input matrix.
"""

from __future__ import annotations

from fractions import Fraction

from .closure import is_idempotent
from .errors import PreconditionError, ShapeError
from .polytope import extremal_columns, polytrope_vertices_2d
from .rank import is_strongly_regular
from .semiring import Matrix, projectivize

__all__ = ["render_matrix"]

_SCALE = 40  # pixels per data unit
_PAD_RATIO = Fraction(1, 10)

_GRID = "#dddddd"
_AXIS = "#999999"
_FILL = "#d9d9d9"
_EDGE = "#333333"


def _fmt(q) -> str:
    s = f"{float(q):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


class _Canvas:
    """Maps exact data coordinates onto a padded, y-flipped pixel viewport."""

    def __init__(self, xs, ys):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        pad = max(xmax - xmin, ymax - ymin) * _PAD_RATIO
        if pad == 0:
            pad = Fraction(1)
        self.xmin, self.xmax = xmin - pad, xmax + pad
        self.ymin, self.ymax = ymin - pad, ymax + pad
        self.width = (self.xmax - self.xmin) * _SCALE
        self.height = (self.ymax - self.ymin) * _SCALE
        self.parts: list[str] = []

    def px(self, x) -> Fraction:
        return (x - self.xmin) * _SCALE

    def py(self, y) -> Fraction:
        return (self.ymax - y) * _SCALE

    def line(self, p, q, color, width):
        self.parts.append(
            f'<line x1="{_fmt(self.px(p[0]))}" y1="{_fmt(self.py(p[1]))}" '
            f'x2="{_fmt(self.px(q[0]))}" y2="{_fmt(self.py(q[1]))}" '
            f'stroke="{color}" stroke-width="{width}"/>'
        )

    def polygon(self, points):
        coords = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in points)
        self.parts.append(
            f'<polygon points="{coords}" fill="{_FILL}" stroke="{_EDGE}" stroke-width="2"/>'
        )

    def dot(self, p):
        self.parts.append(
            f'<circle cx="{_fmt(self.px(p[0]))}" cy="{_fmt(self.py(p[1]))}" r="4" fill="#000000"/>'
        )

    def cross(self, p):
        cx, cy = self.px(p[0]), self.py(p[1])
        arm = 5
        for dx, dy in ((1, 1), (1, -1)):
            self.parts.append(
                f'<line x1="{_fmt(cx - arm * dx)}" y1="{_fmt(cy - arm * dy)}" '
                f'x2="{_fmt(cx + arm * dx)}" y2="{_fmt(cy + arm * dy)}" '
                f'stroke="#000000" stroke-width="2"/>'
            )

    def grid(self):
        x = -((-self.xmin) // 1)  # ceil
        while x <= self.xmax:
            color = _AXIS if x == 0 else _GRID
            self.line((x, self.ymin), (x, self.ymax), color, 1)
            x += 1
        y = -((-self.ymin) // 1)
        while y <= self.ymax:
            color = _AXIS if y == 0 else _GRID
            self.line((self.xmin, y), (self.xmax, y), color, 1)
            y += 1

    def emit(self, comment: str) -> str:
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">\n'
            f"<!-- maxplus render v1: {comment} -->\n"
            f'<rect width="{_fmt(self.width)}" height="{_fmt(self.height)}" fill="#ffffff"/>\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


def _clip_halfplane(poly, f):
    # keep the region f(p) >= 0; exact Sutherland-Hodgman step
    out = []
    m = len(poly)
    for idx in range(m):
        cur, nxt = poly[idx], poly[(idx + 1) % m]
        fc, fn = f(cur), f(nxt)
        if fc >= 0:
            out.append(cur)
        if (fc >= 0) != (fn >= 0):
            t = fc / (fc - fn)
            out.append(
                (cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]))
            )
    return out


def _segment_in_square(c, lo, hi):
    # the segment of the line x - y = c inside [lo, hi]^2
    pts = []
    for x in (lo, hi):
        y = x - c
        if lo <= y <= hi:
            pts.append((x, y))
    for y in (lo, hi):
        x = y + c
        if lo <= x <= hi:
            pts.append((x, y))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


def _render_band(e: Matrix) -> str:
    # the fixed-point band k <= x - y <= -l describes the column space only
    # for zero-diagonal idempotents
    if not is_idempotent(e) or e[0, 0] != 0 or e[1, 1] != 0:
        raise PreconditionError("render requires a zero-diagonal idempotent")
    k, l = e[0, 1], e[1, 0]
    one = Fraction(1)
    lo = min(Fraction(0), k, l) - one
    hi = max(Fraction(0), k, l) + one
    canvas = _Canvas([lo, hi], [lo, hi])
    canvas.grid()
    square = [(lo, lo), (hi, lo), (hi, hi), (lo, hi)]
    band = _clip_halfplane(square, lambda p: (p[0] - p[1]) - k)
    band = _clip_halfplane(band, lambda p: -l - (p[0] - p[1]))
    if band:
        canvas.polygon(band)
    for c in (k, -l):
        seg = _segment_in_square(c, lo, hi)
        if seg:
            canvas.line(seg[0], seg[1], _EDGE, 2)
    canvas.dot((k, Fraction(0)))
    canvas.dot((Fraction(0), l))
    return canvas.emit("band")


def _render_polytrope(e: Matrix) -> str:
    verts = polytrope_vertices_2d(e)
    cols = e.column_vectors()
    dots = [projectivize(cols[j]) for j in extremal_columns(e)]
    origin = (Fraction(0), Fraction(0))
    xs = [p[0] for p in verts] + [origin[0]]
    ys = [p[1] for p in verts] + [origin[1]]
    canvas = _Canvas(xs, ys)
    canvas.grid()
    canvas.polygon(verts)
    for p in dots:
        canvas.dot(p)
    canvas.cross(origin)
    return canvas.emit("polytrope")


def render_matrix(e: Matrix) -> str:
    """SVG text for a 2x2 idempotent band or a 3x3 polytrope."""
    if not e.is_square:
        raise ShapeError(f"square matrix required, got {e.rows}x{e.cols}")
    if e.rows > 3:
        raise PreconditionError("render supports n <= 3")
    if e.rows == 1:
        raise PreconditionError("render needs a 2x2 or 3x3 matrix")
    if e.rows == 2:
        return _render_band(e)
    if not is_idempotent(e) or not is_strongly_regular(e):
        raise PreconditionError("render requires a strongly regular idempotent")
    return _render_polytrope(e)
