"""The dictionary between distance functions and max-plus idempotent matrices.

A distance function d on n points corresponds to the matrix with entries
-d(i, j).  The triangle inequality translates to idempotency, semimetrics
to strongly regular idempotents with negative off-diagonal entries, and
metrics to the symmetric ones.  ``classify`` evaluates every
characterization independently and treats any disagreement between the
provably equivalent routes as an internal bug.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import IntEnum
from fractions import Fraction

from .closure import is_idempotent, kleene_star
from .errors import ConsistencyError, PreconditionError, ShapeError
from .polytope import interior_point, membership
from .rank import is_strongly_regular
from .semiring import Matrix, Vector, residuation, scalar

__all__ = [
    "DistanceClass",
    "ValidationResult",
    "DistanceTable",
    "ClassificationReport",
    "validate",
    "to_matrix",
    "from_matrix",
    "classify",
    "residuation_distance",
    "hilbert_distance",
    "is_antichain",
    "embed",
    "residuation_bound_check",
]

_ZERO = Fraction(0)


class DistanceClass(IntEnum):
    """Strength ladder for a distance function; comparisons follow inclusion."""

    NOT_TRIANGLE = 0
    PRE_SEMIMETRIC = 1
    SEMIMETRIC = 2
    METRIC = 3

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class ValidationResult:
    level: DistanceClass
    witness: tuple[int, ...] | None  # triple for a triangle failure, pair otherwise


class DistanceTable:
    """A function d on pairs of [n] with exact rational values and zero diagonal."""

    __slots__ = ("_grid",)

    def __init__(self, rows):
        grid = tuple(tuple(scalar(e) for e in row) for row in rows)
        n = len(grid)
        if n == 0 or any(len(row) != n for row in grid):
            raise ShapeError("a distance table must be square and non-empty")
        for i in range(n):
            if grid[i][i] != _ZERO:
                raise PreconditionError(f"self-distance of point {i + 1} is {grid[i][i]}, not 0")
        self._grid = grid

    @property
    def n(self) -> int:
        return len(self._grid)

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._grid

    def d(self, i: int, j: int) -> Fraction:
        return self._grid[i][j]

    def __eq__(self, other):
        if not isinstance(other, DistanceTable):
            return NotImplemented
        return self._grid == other._grid

    def __hash__(self):
        return hash(self._grid)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self._grid)
        return f"DistanceTable({self.n} points: {body})"


def validate(table: DistanceTable) -> ValidationResult:
    """Report the strongest class the table satisfies, with a failure witness.

    Checks the triangle inequality first, then nonnegativity and separation,
    then symmetry; the witness is the first violating triple or pair in
    row-major order.
    """
    n = table.n
    d = table.d
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if d(i, j) > d(i, k) + d(k, j):
                    return ValidationResult(DistanceClass.NOT_TRIANGLE, (i, k, j))
    for i in range(n):
        for j in range(n):
            if i != j and (d(i, j) < 0 or d(i, j) == 0):
                return ValidationResult(DistanceClass.PRE_SEMIMETRIC, (i, j))
    for i in range(n):
        for j in range(i + 1, n):
            if d(i, j) != d(j, i):
                return ValidationResult(DistanceClass.SEMIMETRIC, (i, j))
    return ValidationResult(DistanceClass.METRIC, None)


def to_matrix(table: DistanceTable) -> Matrix:
    """The matrix of the distance function: entrywise negation."""
    return Matrix([[-e for e in row] for row in table.entries])


def from_matrix(d: Matrix) -> DistanceTable:
    """Inverse of :func:`to_matrix`; requires an all-zero diagonal."""
    if not d.is_square:
        raise ShapeError(f"square matrix required, got {d.rows}x{d.cols}")
    if any(d[i, i] != _ZERO for i in range(d.rows)):
        raise PreconditionError("matrix has a nonzero diagonal entry")
    return DistanceTable([[-e for e in row] for row in d.entries])


@dataclass(frozen=True)
class ClassificationReport:
    """Independent findings for one square matrix; see :func:`classify`."""

    idempotent: bool
    zero_diagonal: bool
    kleene_fixed: bool
    strongly_regular: bool
    off_diagonal_negative: bool
    symmetric: bool
    origin_in_interior: bool
    columns_sum_to_zero: bool
    rows_sum_to_zero: bool
    is_semimetric_matrix: bool
    is_metric_matrix: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _origin_interior(a: Matrix, sr: bool, idem: bool) -> bool:
    if not (sr and idem):
        return False
    origin = Vector.zeros(a.rows)
    if not membership(a.column_vectors(), origin).member:
        return False
    return interior_point(a, origin)


def classify(a: Matrix) -> ClassificationReport:
    """Evaluate every matrix-side characterization of semimetrics and metrics.

    All flags are computed independently; the characterizations are provably
    equivalent, so any disagreement raises ``ConsistencyError``.
    """
    if not a.is_square:
        raise ShapeError(f"square matrix required, got {a.rows}x{a.cols}")
    n = a.rows
    idem = is_idempotent(a)
    zero_diag = all(a[i, i] == _ZERO for i in range(n))
    star = kleene_star(a)
    kleene_fixed = star.converges and star.star == a
    sr = is_strongly_regular(a)
    off_neg = all(a[i, j] < 0 for i in range(n) for j in range(n) if i != j)
    symmetric = a == a.transpose()
    cols_zero = all(max(a[i, j] for j in range(n)) == _ZERO for i in range(n))
    rows_zero = all(max(a[i, j] for i in range(n)) == _ZERO for j in range(n))
    origin_col = _origin_interior(a, sr, idem)
    origin_row = _origin_interior(a.transpose(), sr, idem)

    semi = zero_diag and validate(from_matrix(a)).level >= DistanceClass.SEMIMETRIC

    equivalents = {
        "regular idempotent with negative off-diagonal": sr and off_neg and idem,
        "star-fixed with negative off-diagonal": kleene_fixed and off_neg,
        "origin interior to the column space": origin_col,
        "columns sum to the interior origin": origin_col and cols_zero,
        "origin interior to the row space": origin_row,
        "rows sum to the interior origin": origin_row and rows_zero,
    }
    for name, value in equivalents.items():
        if value != semi:
            raise ConsistencyError(
                f"semimetric characterizations disagree: direct test {semi}, {name} {value}"
            )

    metric = semi and symmetric
    if metric != (sr and symmetric and idem):
        raise ConsistencyError("metric characterizations disagree")

    return ClassificationReport(
        idempotent=idem,
        zero_diagonal=zero_diag,
        kleene_fixed=kleene_fixed,
        strongly_regular=sr,
        off_diagonal_negative=off_neg,
        symmetric=symmetric,
        origin_in_interior=origin_col,
        columns_sum_to_zero=cols_zero,
        rows_sum_to_zero=rows_zero,
        is_semimetric_matrix=semi,
        is_metric_matrix=metric,
    )


def residuation_distance(x: Vector, y: Vector) -> Fraction:
    """max(x_i - y_i): the negated residuation bracket."""
    return -residuation(x, y)


def hilbert_distance(x: Vector, y: Vector) -> Fraction:
    """Mean of the two residuation distances; a metric up to scaling."""
    return (residuation_distance(x, y) + residuation_distance(y, x)) / 2


def is_antichain(points) -> bool:
    """No two distinct points comparable in the componentwise order."""
    pts = list(points)
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            if x == y:
                continue
            if x <= y or y <= x:
                return False
    return True


def embed(table: DistanceTable) -> list[Vector]:
    """Realize a semimetric as points of tropical n-space.

    The columns of the associated matrix reproduce the table under
    residuation distance, and under the Hilbert distance as well when the
    table is symmetric.
    """
    result = validate(table)
    if result.level < DistanceClass.SEMIMETRIC:
        witness = tuple(i + 1 for i in result.witness)
        raise PreconditionError(
            f"table is {result.level}, not a semimetric (witness points {witness})"
        )
    return to_matrix(table).column_vectors()


def residuation_bound_check(e: Matrix) -> bool:
    """Verify the residuation identities satisfied by every idempotent.

    Each entry is bounded by the row and the column bracket.  The row
    bracket is attained whenever e[j, j] == 0, the column bracket whenever
    e[i, i] == 0; in particular both equalities hold everywhere for
    zero-diagonal idempotents.  These always hold, so a violation is a
    fatal consistency error.
    """
    if not is_idempotent(e):
        raise PreconditionError("residuation_bound_check requires an idempotent matrix")
    n = e.rows
    rows = e.row_vectors()
    cols = e.column_vectors()
    for i in range(n):
        for j in range(n):
            row_bracket = residuation(rows[j], rows[i])
            col_bracket = residuation(cols[i], cols[j])
            if e[i, j] > row_bracket or e[i, j] > col_bracket:
                raise ConsistencyError(f"residuation bound violated at ({i}, {j})")
            if e[j, j] == _ZERO and e[i, j] != row_bracket:
                raise ConsistencyError(f"row residuation equality violated at ({i}, {j})")
            if e[i, i] == _ZERO and e[i, j] != col_bracket:
                raise ConsistencyError(f"column residuation equality violated at ({i}, {j})")
    return True
