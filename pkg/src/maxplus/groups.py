"""Isometry groups, units of the extended matrix monoid, and maximal subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closure import is_idempotent, kleene_star
from .errors import ConsistencyError, PreconditionError, ShapeError
from .metric import DistanceClass, DistanceTable, classify, validate
from .permutation import Permutation
from .polytope import extremal_indices, membership
from .rank import is_strongly_regular
from .semiring import NEG_INF, ExtMatrix, Matrix, scalar

__all__ = [
    "IsometryGroup",
    "UnitDecomposition",
    "is_unit",
    "unit_decompose",
    "isometry_group",
    "commutes_with",
    "hclass_element",
    "hclass_contains",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class IsometryGroup:
    """All permutations preserving a distance table, closed under the group ops."""

    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma) -> bool:
        return sigma in self.elements

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class UnitDecomposition:
    """Factorization of a unit as diagonal times permutation matrix."""

    diagonal: tuple[Fraction, ...]
    perm: Permutation


def _finite_positions(g: ExtMatrix):
    rows = []
    for i in range(g.rows):
        rows.append([j for j in range(g.cols) if g[i, j] is not NEG_INF])
    return rows


def is_unit(g: ExtMatrix) -> bool:
    """Exactly one finite entry in every row and every column."""
    if not g.is_square:
        raise ShapeError(f"square matrix required, got {g.rows}x{g.cols}")
    per_row = _finite_positions(g)
    if any(len(r) != 1 for r in per_row):
        return False
    cols = [r[0] for r in per_row]
    return sorted(cols) == list(range(g.rows))


def unit_decompose(g: ExtMatrix) -> UnitDecomposition:
    """Write a unit as S * P with S the diagonal of its rows' finite entries."""
    if not is_unit(g):
        raise PreconditionError("unit_decompose requires a unit matrix")
    n = g.rows
    per_row = _finite_positions(g)
    diagonal = tuple(g[i, per_row[i][0]] for i in range(n))
    images = [0] * n
    for i in range(n):
        images[per_row[i][0]] = i  # column j's finite entry sits in row sigma(j)
    return UnitDecomposition(diagonal, Permutation(images))


def _preserves(table: DistanceTable, images) -> bool:
    n = table.n
    return all(
        table.d(images[i], images[j]) == table.d(i, j)
        for i in range(n)
        for j in range(n)
    )


def isometry_group(table: DistanceTable) -> IsometryGroup:
    """All permutations of the points preserving the (possibly asymmetric) table.

    Backtracking search pruned by each point's multiset of in/out distances;
    the returned set is verified closed under composition and inverse.
    """
    if validate(table).level < DistanceClass.SEMIMETRIC:
        raise PreconditionError("isometry_group requires at least a semimetric table")
    n = table.n
    d = table.d
    profile = [
        tuple(sorted((d(i, k), d(k, i)) for k in range(n) if k != i)) for i in range(n)
    ]
    candidates = [
        [j for j in range(n) if profile[j] == profile[i]] for i in range(n)
    ]

    found: list[Permutation] = []
    images = [-1] * n
    taken = [False] * n

    def extend(i: int):
        if i == n:
            found.append(Permutation(images))
            return
        for j in candidates[i]:
            if taken[j]:
                continue
            ok = True
            for k in range(i):
                if d(images[k], j) != d(k, i) or d(j, images[k]) != d(i, k):
                    ok = False
                    break
            if ok:
                images[i] = j
                taken[j] = True
                extend(i + 1)
                taken[j] = False
        images[i] = -1

    extend(0)
    elements = tuple(sorted(found, key=lambda p: p.images))
    group = set(elements)
    for p in elements:
        if p.inverse() not in group:
            raise ConsistencyError("isometry set is not closed under inversion")
        for q in elements:
            if p * q not in group:
                raise ConsistencyError("isometry set is not closed under composition")
    return IsometryGroup(elements)


def commutes_with(g: ExtMatrix, d: ExtMatrix) -> bool:
    """Exact test of g*d == d*g."""
    if g.rows != d.rows or g.cols != d.cols or not g.is_square:
        raise ShapeError("commutes_with requires square matrices of equal size")
    return (g @ d) == (d @ g)


def hclass_element(d: Matrix, sigma: Permutation, lam) -> Matrix:
    """The maximal-subgroup member indexed by an isometry and a scalar.

    Returns lam * P * d, i.e. ``d`` with rows permuted by sigma and shifted
    by lam.  The map (sigma, lam) -> element is a group isomorphism onto
    the subgroup around ``d``.
    """
    lam = scalar(lam)
    if not classify(d).is_metric_matrix:
        raise PreconditionError("hclass_element requires a metric matrix")
    if sigma.n != d.rows:
        raise ShapeError("permutation degree does not match the matrix size")
    table = DistanceTable([[-e for e in row] for row in d.entries])
    if not _preserves(table, sigma.images):
        raise PreconditionError("permutation is not an isometry of the metric")
    inv = sigma.inverse()
    grid = [[lam + e for e in d.entries[inv(i)]] for i in range(d.rows)]
    return Matrix(grid)


def _resolve_idempotent(m: Matrix, supplied: Matrix | None) -> Matrix:
    if supplied is not None:
        if not is_idempotent(supplied):
            raise PreconditionError("supplied witness is not idempotent")
        return supplied
    if is_idempotent(m):
        return m
    star = kleene_star(m)
    if star.converges:
        return star.star
    raise PreconditionError(
        "cannot recover an idempotent for the column space; pass one explicitly"
    )


def hclass_contains(m: Matrix, n: Matrix, idempotent: Matrix | None = None) -> bool:
    """Whether ``n`` lies in the maximal subgroup determined by ``m``.

    ``m`` must span the column space of a strongly regular idempotent
    (itself, a supplied witness, or its Kleene star).  Membership means the
    column spaces coincide and the row space of ``n`` is the negated column
    space, both decided by mutual span membership on generators.
    """
    if not (m.is_square and n.is_square and m.rows == n.rows):
        raise ShapeError("hclass_contains requires square matrices of equal size")
    cols_m = m.column_vectors()
    e = _resolve_idempotent(m, idempotent)
    if not is_strongly_regular(e):
        raise PreconditionError("column space is not that of a strongly regular idempotent")
    cols_e = e.column_vectors()
    same_space = all(membership(cols_m, c).member for c in cols_e) and all(
        membership(cols_e, c).member for c in cols_m
    )
    if not same_space:
        raise PreconditionError("witness idempotent has a different column space")

    cols_n = n.column_vectors()
    columns_match = all(membership(cols_m, c).member for c in cols_n) and all(
        membership(cols_n, c).member for c in cols_m
    )
    if not columns_match:
        return False
    rows_n = n.row_vectors()
    negated_rows_inside = all(membership(cols_m, -r).member for r in rows_n)
    extremals_covered = all(
        membership(rows_n, -cols_m[j]).member for j in extremal_indices(cols_m)
    )
    return negated_rows_inside and extremals_covered
