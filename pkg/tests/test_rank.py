import random
from fractions import Fraction

import pytest

from maxplus import (
    Matrix,
    Permutation,
    PreconditionError,
    ShapeError,
    idempotent_family,
    idempotent_rank,
    is_idempotent,
    is_strongly_regular,
    permanent,
    zero_diag_regularity,
)

from helpers import (
    HEX_ASYM,
    HEX_SYM,
    TRIANGLE,
    brute_permanent,
    rand_matrix,
    same_column_space,
    star_closed_zero_diag,
)


def test_permanent_examples():
    res = permanent(HEX_ASYM)
    assert res.value == Fraction(0)
    assert res.attaining_unique
    assert res.witness == Permutation.identity(3)

    flat = permanent(Matrix([[0, 0], [0, 0]]))
    assert flat.value == Fraction(0)
    assert not flat.attaining_unique

    res = permanent(HEX_SYM)
    assert res.value == Fraction(0) and res.attaining_unique


def test_permanent_requires_square():
    with pytest.raises(ShapeError):
        permanent(Matrix([[0, 1]]))


def test_permanent_matches_brute_force():
    rng = random.Random(71)
    for _ in range(40):
        a = rand_matrix(rng, rng.randint(1, 6))
        res = permanent(a)
        value, count, _ = brute_permanent(a)
        assert res.value == value
        assert res.attaining_unique == (count == 1)
        assert sum(a[i, res.witness(i)] for i in range(a.rows)) == value


def test_permanent_witness_on_tie():
    # Both permutations attain 0; whichever witness comes back must attain it.
    res = permanent(Matrix([[0, 0], [0, 0]]))
    assert sum(res.witness(i) is not None for i in range(2)) == 2


def test_permanent_uniqueness_under_heavy_ties():
    # small entry alphabet forces many optimal-permutation ties
    rng = random.Random(75)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = Matrix(
            [
                [Fraction(rng.choice((-1, 0, 0, 1)), rng.choice((1, 2))) for _ in range(n)]
                for _ in range(n)
            ]
        )
        res = permanent(a)
        value, count, _ = brute_permanent(a)
        assert res.value == value
        assert res.attaining_unique == (count == 1)


def test_is_strongly_regular_examples():
    assert is_strongly_regular(TRIANGLE)
    assert not is_strongly_regular(Matrix([[0, 0], [0, 0]]))
    assert is_strongly_regular(HEX_SYM)


def test_zero_diag_regularity_examples():
    assert zero_diag_regularity(TRIANGLE)
    assert not zero_diag_regularity(Matrix([[0, 0], [0, 0]]))
    assert zero_diag_regularity(HEX_SYM)


def test_zero_diag_regularity_preconditions():
    with pytest.raises(PreconditionError, match="idempotent"):
        zero_diag_regularity(Matrix([[1]]))
    with pytest.raises(PreconditionError, match="diagonal"):
        zero_diag_regularity(Matrix([[0, 0], [-1, -1]]))


def test_zero_diag_regularity_random_agreement():
    # the pairwise test is asserted against the permanent inside the call
    rng = random.Random(72)
    for _ in range(25):
        e = star_closed_zero_diag(rng, rng.randint(2, 5))
        zero_diag_regularity(e)


def test_idempotent_rank_examples():
    assert idempotent_rank(HEX_ASYM) == 3
    assert idempotent_rank(Matrix([[0, 0], [0, 0]])) == 1
    assert idempotent_rank(Matrix([[0, -1], [0, -1]])) == 1


def test_idempotent_rank_bounds():
    rng = random.Random(73)
    for _ in range(25):
        e = star_closed_zero_diag(rng, rng.randint(2, 5))
        r = idempotent_rank(e)
        zeros = sum(1 for i in range(e.rows) if e[i, i] == 0)
        assert 1 <= r <= zeros
        assert (r == e.rows) == is_strongly_regular(e)


def test_idempotent_rank_requires_idempotent():
    with pytest.raises(PreconditionError):
        idempotent_rank(Matrix([[1]]))


def test_idempotent_family_scales_lowest_redundant_column():
    flat = Matrix([[0, 0], [0, 0]])
    assert idempotent_family(flat, -1) == Matrix([[-1, 0], [-1, 0]])
    assert idempotent_family(flat, -2) == Matrix([[-2, 0], [-2, 0]])


def test_idempotent_family_properties():
    rng = random.Random(74)
    flat = Matrix([[0, 0], [0, 0]])
    seen = set()
    for k in range(1, 6):
        lam = Fraction(-k, 2)
        member = idempotent_family(flat, lam)
        assert is_idempotent(member)
        assert member != flat
        assert same_column_space(member, flat)
        assert member not in seen  # injective in the parameter
        seen.add(member)
    for _ in range(12):
        e = star_closed_zero_diag(rng, rng.randint(2, 4))
        if is_strongly_regular(e):
            continue
        member = idempotent_family(e, Fraction(-3, 2))
        assert is_idempotent(member)
        assert member != e
        assert same_column_space(member, e)


def test_idempotent_family_errors():
    with pytest.raises(PreconditionError, match="strongly regular"):
        idempotent_family(TRIANGLE, -1)
    with pytest.raises(PreconditionError, match="negative"):
        idempotent_family(Matrix([[0, 0], [0, 0]]), 0)
    with pytest.raises(PreconditionError, match="idempotent"):
        idempotent_family(Matrix([[1]]), -1)
