"""Column spaces as tropical polytopes: membership, extremals, duality, vertices.

Row-space questions are answered by transposing and reusing the column
machinery; rows and columns live in the same space here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .closure import is_idempotent
from .errors import ConsistencyError, PreconditionError, ShapeError
from .rank import is_strongly_regular
from .semiring import Matrix, Vector, mat_vec, residuation, scale

__all__ = [
    "SpanMembership",
    "PolytropeHRep",
    "membership",
    "project_onto",
    "interior_point",
    "extremal_indices",
    "extremal_columns",
    "duality_map",
    "negation_closed",
    "halfspace_rep",
    "polytrope_vertices_2d",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SpanMembership:
    """Result of projecting a point onto the span of a generating set.

    ``coefficients`` are the maximal scalings, ``projection`` their join;
    the projection never exceeds the point and equals it exactly for
    members of the span.
    """

    member: bool
    coefficients: tuple[Fraction, ...]
    projection: Vector


def membership(generators: Sequence[Vector], x: Vector) -> SpanMembership:
    """Decide whether ``x`` lies in the tropical span of ``generators``."""
    gens = list(generators)
    if not gens:
        raise PreconditionError("membership requires at least one generator")
    coeffs = tuple(residuation(g, x) for g in gens)
    proj = scale(coeffs[0], gens[0])
    for lam, g in zip(coeffs[1:], gens[1:]):
        proj = proj.oplus(scale(lam, g))
    return SpanMembership(proj == x, coeffs, proj)


def _require_strongly_regular_idempotent(e: Matrix, what: str):
    if not e.is_square:
        raise ShapeError(f"square matrix required, got {e.rows}x{e.cols}")
    if not is_idempotent(e):
        raise PreconditionError(f"{what} requires an idempotent matrix")
    if not is_strongly_regular(e):
        raise PreconditionError(f"{what} requires a strongly regular matrix")


def project_onto(e: Matrix, x: Vector) -> Vector:
    """Left-multiply by ``e``: fixes members, sends outside points to the boundary."""
    _require_strongly_regular_idempotent(e, "project_onto")
    return mat_vec(e, x)


def interior_point(e: Matrix, x: Vector) -> bool:
    """Whether ``x`` is interior to the column space of ``e``.

    For strongly regular idempotents, interior points are exactly those
    with a unique expression over the columns: every column must attain
    some coordinate of ``x`` alone.
    """
    _require_strongly_regular_idempotent(e, "interior_point")
    cols = e.column_vectors()
    mem = membership(cols, x)
    if not mem.member:
        raise PreconditionError("point is not in the column space")
    n = e.rows
    lams = mem.coefficients
    for j in range(n):
        private = False
        for i in range(n):
            if lams[j] + e[i, j] != x[i]:
                continue
            if all(k == j or lams[k] + e[i, k] < x[i] for k in range(n)):
                private = True
                break
        if not private:
            return False
    return True


def _direction(v: Vector) -> tuple[Fraction, ...]:
    # scaling-class canonical form: subtract the last coordinate
    last = v[len(v) - 1]
    return tuple(e - last for e in v)


def extremal_indices(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the extremal generators of the span of ``vectors``.

    Scaling classes are collapsed to their smallest index; a representative
    is extremal when it is not in the span of the other representatives.
    """
    vecs = list(vectors)
    if not vecs:
        raise PreconditionError("extremal_indices requires at least one vector")
    reps: dict[tuple, int] = {}
    for idx, v in enumerate(vecs):
        reps.setdefault(_direction(v), idx)
    rep_idx = sorted(reps.values())
    if len(rep_idx) == 1:
        return rep_idx
    out = []
    for idx in rep_idx:
        others = [vecs[k] for k in rep_idx if k != idx]
        if not membership(others, vecs[idx]).member:
            out.append(idx)
    return out


def extremal_columns(e: Matrix) -> list[int]:
    """Column indices generating the extremal points of the column space.

    Only columns with a zero diagonal entry can be extremal, so the search
    is restricted to those before deduplicating scaling classes.
    """
    if not e.is_square:
        raise ShapeError(f"square matrix required, got {e.rows}x{e.cols}")
    if not is_idempotent(e):
        raise PreconditionError("extremal_columns requires an idempotent matrix")
    cols = e.column_vectors()
    zero_diag = [j for j in range(e.rows) if e[j, j] == _ZERO]
    local = extremal_indices([cols[j] for j in zero_diag])
    return [zero_diag[k] for k in local]


def duality_map(a: Matrix, x: Vector) -> Vector:
    """Send a row-space point to the column space: x -> a * (-x)."""
    if not membership(a.row_vectors(), x).member:
        raise PreconditionError("point is not in the row space")
    return mat_vec(a, -x)


def negation_closed(e: Matrix) -> bool:
    """Whether the column space equals its own pointwise negation.

    Decided two independent ways that must agree: symmetry of ``e``, and
    membership of every negated extremal column.
    """
    _require_strongly_regular_idempotent(e, "negation_closed")
    symmetric = e == e.transpose()
    cols = e.column_vectors()
    by_extremals = all(
        membership(cols, -cols[j]).member for j in extremal_columns(e)
    )
    if symmetric != by_extremals:
        raise ConsistencyError("negation-closure tests disagree (symmetry vs extremals)")
    return symmetric


@dataclass(frozen=True)
class PolytropeHRep:
    """The column space of a zero-diagonal idempotent as difference constraints.

    A point belongs exactly when x[i] - x[j] >= bounds[i][j] for all i, j;
    the diagonal constraints are vacuous.
    """

    n: int
    bounds: tuple[tuple[Fraction, ...], ...]

    def contains(self, x: Vector) -> bool:
        if len(x) != self.n:
            raise ShapeError(f"expected a vector of length {self.n}, got {len(x)}")
        return all(
            x[i] - x[j] >= self.bounds[i][j]
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )


def halfspace_rep(e: Matrix) -> PolytropeHRep:
    """Halfspace description of the column space of a zero-diagonal idempotent."""
    if not e.is_square:
        raise ShapeError(f"square matrix required, got {e.rows}x{e.cols}")
    if not is_idempotent(e) or any(e[i, i] != _ZERO for i in range(e.rows)):
        raise PreconditionError("halfspace_rep requires a zero-diagonal idempotent")
    return PolytropeHRep(e.rows, e.entries)


def _ccw_sorted(points):
    k = len(points)
    cx = sum(p[0] for p in points) / k
    cy = sum(p[1] for p in points) / k

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        px, py = p[0] - cx, p[1] - cy
        qx, qy = q[0] - cx, q[1] - cy
        cross = px * qy - py * qx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    ordered = sorted(points, key=cmp_to_key(cmp))
    start = ordered.index(min(ordered))
    return ordered[start:] + ordered[:start]


def polytrope_vertices_2d(e: Matrix) -> list[tuple[Fraction, Fraction]]:
    """Vertices of the projectivized 3x3 polytrope, counterclockwise.

    In coordinates (u, v) = (x1 - x3, x2 - x3) the region is cut out by two
    vertical, two horizontal and two slope-one boundary lines; pairwise
    intersections that satisfy all six constraints are the vertices.  The
    list starts at the lexicographically smallest vertex.
    """
    _require_strongly_regular_idempotent(e, "polytrope_vertices_2d")
    if e.rows != 3:
        raise PreconditionError("vertex enumeration is implemented for 3x3 matrices only")
    u_lo, u_hi = e[0, 2], -e[2, 0]
    v_lo, v_hi = e[1, 2], -e[2, 1]
    w_lo, w_hi = e[0, 1], -e[1, 0]  # w = u - v

    candidates = set()
    for u in (u_lo, u_hi):
        for v in (v_lo, v_hi):
            candidates.add((u, v))
        for w in (w_lo, w_hi):
            candidates.add((u, u - w))
    for v in (v_lo, v_hi):
        for w in (w_lo, w_hi):
            candidates.add((v + w, v))

    feasible = [
        (u, v)
        for u, v in candidates
        if u_lo <= u <= u_hi and v_lo <= v <= v_hi and w_lo <= u - v <= w_hi
    ]
    return _ccw_sorted(feasible)
