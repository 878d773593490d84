"""Spectral data of square max-plus matrices: cycle means, Kleene star, idempotency."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, ShapeError
from .semiring import NEG_INF, Matrix

__all__ = ["StarResult", "eigenvalue", "kleene_star", "is_idempotent", "star_fixed_point_check"]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class StarResult:
    """Outcome of a Kleene star computation.

    ``converges`` holds exactly when the eigenvalue is <= 0; ``star`` is the
    series limit in that case and ``None`` otherwise.
    """

    converges: bool
    star: Matrix | None
    eigenvalue: Fraction


def _require_square(a: Matrix):
    if not a.is_square:
        raise ShapeError(f"square matrix required, got {a.rows}x{a.cols}")


def eigenvalue(a: Matrix) -> Fraction:
    """Maximum cycle mean of the complete digraph weighted by ``a``.

    Karp's recurrence, run exactly over rationals: with walk[k][v] the best
    weight of a k-edge walk from node 0 to v, the answer is
    max_v min_k (walk[n][v] - walk[k][v]) / (n - k).
    """
    _require_square(a)
    n = a.rows
    grid = a.entries
    prev = [NEG_INF] * n
    prev[0] = _ZERO
    table = [prev]
    for _ in range(n):
        cur = [NEG_INF] * n
        for u in range(n):
            w = prev[u]
            if w is NEG_INF:
                continue
            row = grid[u]
            for v in range(n):
                cand = w + row[v]
                if cur[v] is NEG_INF or cand > cur[v]:
                    cur[v] = cand
        table.append(cur)
        prev = cur
    best = None
    last = table[n]
    for v in range(n):
        if last[v] is NEG_INF:
            continue
        worst = None
        for k in range(n):
            dk = table[k][v]
            if dk is NEG_INF:
                continue
            mean = Fraction(last[v] - dk, n - k)
            if worst is None or mean < worst:
                worst = mean
        if worst is not None and (best is None or worst > best):
            best = worst
    return best


def kleene_star(a: Matrix) -> StarResult:
    """Join of all powers of ``a`` together with the identity.

    Computed as a Floyd-Warshall closure (best walk weights, exact when no
    cycle has positive weight) followed by joining the zero diagonal.
    Divergence is decided by the exact sign of the eigenvalue.
    """
    lam = eigenvalue(a)
    if lam > 0:
        return StarResult(False, None, lam)
    n = a.rows
    grid = [list(row) for row in a.entries]
    for k in range(n):
        rowk = grid[k]
        for i in range(n):
            ik = grid[i][k]
            rowi = grid[i]
            for j in range(n):
                cand = ik + rowk[j]
                if cand > rowi[j]:
                    rowi[j] = cand
    for i in range(n):
        if grid[i][i] < _ZERO:
            grid[i][i] = _ZERO
    return StarResult(True, Matrix(grid), lam)


def is_idempotent(a: Matrix) -> bool:
    """Exact test of a*a == a under the tropical product."""
    _require_square(a)
    return (a @ a) == a


def star_fixed_point_check(a: Matrix) -> bool:
    """Whether ``a`` equals its own Kleene star.

    These are exactly the idempotents with all-zero diagonal; the direct
    test is cross-checked against the computed closure.
    """
    _require_square(a)
    direct = all(a[i, i] == _ZERO for i in range(a.rows)) and is_idempotent(a)
    res = kleene_star(a)
    if res.converges:
        if (res.star == a) != direct:
            raise ConsistencyError("star fixed-point test disagrees with the computed closure")
    elif direct:
        raise ConsistencyError("matrix equal to its star but the star diverges")
    return direct
