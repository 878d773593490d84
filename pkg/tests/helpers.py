"""Seeded random generators and brute-force oracles shared by the tests."""

from fractions import Fraction
from itertools import permutations

from maxplus import (
    DistanceTable,
    ExtMatrix,
    Matrix,
    Vector,
    eigenvalue,
    from_matrix,
    kleene_star,
    mat_mul,
    membership,
    scale,
)

# The three 3x3 golden idempotents: a polytrope with the origin on its
# boundary, an asymmetric hexagon (a semimetric), and a centrally
# symmetric hexagon (a metric).
TRIANGLE = Matrix([[0, 0, 0], [-3, 0, 0], [-3, -3, 0]])
HEX_ASYM = Matrix([[0, -1, -1], [-3, 0, -2], [-2, -1, 0]])
HEX_SYM = Matrix([["0", "-1.5", "-1.5"], ["-1.5", "0", "-1"], ["-1.5", "-1", "0"]])

# Four points: a hub at distance 1 from three leaves that are pairwise at
# distance 2.  Not embeddable in any Euclidean space.
CLAW = DistanceTable([[0, 2, 2, 1], [2, 0, 2, 1], [2, 2, 0, 1], [1, 1, 1, 0]])

GOLDEN_IDEMPOTENTS = (TRIANGLE, HEX_ASYM, HEX_SYM)


def rand_scalar(rng, lo=-6, hi=6, dens=(1, 1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def rand_vector(rng, n, lo=-6, hi=6):
    return Vector(rand_scalar(rng, lo, hi) for _ in range(n))


def rand_matrix(rng, n, lo=-6, hi=6):
    return Matrix([[rand_scalar(rng, lo, hi) for _ in range(n)] for _ in range(n)])


def rand_zero_diag(rng, n, lo=-6, hi=6):
    grid = [[rand_scalar(rng, lo, hi) for _ in range(n)] for i in range(n)]
    for i in range(n):
        grid[i][i] = Fraction(0)
    return Matrix(grid)


def shift_nonpositive(rng, a):
    """Shift all entries so the maximum cycle mean becomes 0 or negative."""
    lam = eigenvalue(a)
    extra = Fraction(rng.choice((0, 0, 1, 2)))
    return a.scale(-lam - extra)


def star_closed_zero_diag(rng, n):
    """A random zero-diagonal idempotent (the star of a shifted matrix)."""
    res = kleene_star(shift_nonpositive(rng, rand_matrix(rng, n)))
    assert res.converges
    return res.star


def rand_semimetric(rng, n, symmetric=False):
    """Positive raw distances tightened by star closure; always a semimetric."""
    while True:
        grid = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j:
                    grid[i][j] = Fraction(rng.randint(1, 12), rng.choice((1, 2, 3)))
        if symmetric:
            for i in range(n):
                for j in range(i + 1, n):
                    grid[j][i] = grid[i][j]
        res = kleene_star(Matrix([[-e for e in row] for row in grid]))
        assert res.converges
        star = res.star
        if all(
            star[i, j] < 0 for i in range(n) for j in range(n) if i != j
        ):
            return from_matrix(star)


def rand_metric(rng, n):
    return rand_semimetric(rng, n, symmetric=True)


def rand_member(rng, e):
    """A random point of the column space of ``e``."""
    cols = e.column_vectors()
    point = scale(rand_scalar(rng), cols[0])
    for c in cols[1:]:
        if rng.random() < 0.8:
            point = point.oplus(scale(rand_scalar(rng), c))
    return point


def rand_outside(rng, e):
    """A random point not in the column space of ``e`` (n >= 2 only)."""
    cols = e.column_vectors()
    while True:
        x = rand_vector(rng, e.rows)
        if not membership(cols, x).member:
            return x


def series_star(a):
    """Brute-force star: join of the identity with the first n powers."""
    acc = ExtMatrix.identity(a.rows)
    power = ExtMatrix.identity(a.rows)
    for _ in range(a.rows):
        power = mat_mul(power, a)
        acc = acc.oplus(power)
    return acc


def brute_permanent(a):
    """(value, attain count, one witness) by enumerating all permutations."""
    n = a.rows
    best = None
    count = 0
    witness = None
    for images in permutations(range(n)):
        total = sum((a[i, images[i]] for i in range(n)), Fraction(0))
        if best is None or total > best:
            best, count, witness = total, 1, images
        elif total == best:
            count += 1
    return best, count, witness


def brute_cycle_mean(a):
    """Maximum mean over all simple cycles, by direct enumeration."""
    n = a.rows
    best = None
    for k in range(1, n + 1):
        for combo in permutations(range(n), k):
            if combo[0] != min(combo):
                continue  # one canonical rotation per cycle
            weight = sum(a[combo[i], combo[(i + 1) % k]] for i in range(k))
            mean = Fraction(weight, k)
            if best is None or mean > best:
                best = mean
    return best


def brute_isometries(table):
    """All distance-preserving permutations, as sorted image tuples."""
    n = table.n
    out = []
    for images in permutations(range(n)):
        if all(
            table.d(images[i], images[j]) == table.d(i, j)
            for i in range(n)
            for j in range(n)
        ):
            out.append(images)
    return sorted(out)


def same_column_space(a, b):
    cols_a = a.column_vectors()
    cols_b = b.column_vectors()
    return all(membership(cols_a, c).member for c in cols_b) and all(
        membership(cols_b, c).member for c in cols_a
    )
