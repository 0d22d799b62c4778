import random
from fractions import Fraction

import pytest

from braidsep.field import RHO, EisensteinRational
from braidsep.linalg import (
    IDENTITY,
    ZERO,
    BlockLayout,
    ExactMatrix,
    SingularMatrixError,
    assemble_blocks,
    span_dimension,
)

E = EisensteinRational


def naive_inverse(rows):
    """Oracle: textbook Gauss-Jordan with field-element arithmetic.

    Independent of the fraction-free elimination used by ExactMatrix.
    Returns None for singular input.
    """
    n = len(rows)
    aug = [list(row) + [E(1) if j == i else E(0) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != E(0)), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != E(0):
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def random_entry(rng, span=9):
    return E(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
    )


def random_matrix(rng, n, span=9):
    return ExactMatrix([[random_entry(rng, span) for _ in range(n)] for _ in range(n)])


def test_identity_product():
    M = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert ExactMatrix.identity(3) @ M == M


def test_rho_diagonal_cubes_to_identity():
    D = ExactMatrix.diagonal([RHO, RHO, RHO])
    assert D @ D @ D == ExactMatrix.identity(3)


def test_all_ones_squares_to_twos():
    ones = ExactMatrix([[1, 1], [1, 1]])
    assert ones @ ones == ExactMatrix([[2, 2], [2, 2]])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)


def test_diagonal_inverse():
    got = ExactMatrix.diagonal([RHO, E(2)]).inverse()
    assert got == ExactMatrix.diagonal([E(-1, -1), Fraction(1, 2)])


def test_identity_inverse():
    assert ExactMatrix.identity(5).inverse() == ExactMatrix.identity(5)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrixError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_trace_examples():
    assert ExactMatrix.identity(6).trace() == E(6)
    assert ExactMatrix.diagonal([E(1), RHO, RHO**2]).trace() == E(0)
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 3).trace()


def test_inverse_matches_gauss_jordan_oracle():
    rng = random.Random(20260814)
    checked_invertible = checked_singular = 0
    while checked_invertible < 120 or checked_singular < 20:
        n = rng.randint(1, 7)
        rows = [[random_entry(rng) for _ in range(n)] for _ in range(n)]
        if checked_invertible >= 120:
            # low-rank product forces singularity
            r = rng.randint(1, n) if n > 1 else 1
            left = ExactMatrix([[random_entry(rng) for _ in range(max(1, n - 1))] for _ in range(n)])
            right = ExactMatrix([[random_entry(rng) for _ in range(n)] for _ in range(max(1, n - 1))])
            rows = (left @ right).to_lists()
        M = ExactMatrix(rows)
        expected = naive_inverse(rows)
        if expected is None:
            with pytest.raises(SingularMatrixError):
                M.inverse()
            assert M.determinant() == E(0)
            checked_singular += 1
            continue
        inv = M.inverse()
        assert inv == ExactMatrix(expected)
        assert M @ inv == ExactMatrix.identity(n)
        assert inv @ M == ExactMatrix.identity(n)
        checked_invertible += 1


def test_unit_pivots_are_divided_exactly():
    # pivots landing on units of Z[rho] exercise the conjugate-division path
    rng = random.Random(3)
    units = [E(1), E(-1), RHO, -RHO, RHO**2, -(RHO**2), E(0)]
    for _ in range(150):
        n = rng.randint(1, 5)
        rows = [[rng.choice(units) for _ in range(n)] for _ in range(n)]
        M = ExactMatrix(rows)
        expected = naive_inverse(rows)
        if expected is None:
            with pytest.raises(SingularMatrixError):
                M.inverse()
        else:
            assert M.inverse() == ExactMatrix(expected)


def test_double_inverse_and_det_multiplicativity():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 6)
        A, B = random_matrix(rng, n), random_matrix(rng, n)
        assert (A @ B).determinant() == A.determinant() * B.determinant()
        assert (A @ B).trace() == (B @ A).trace()
        try:
            assert A.inverse().inverse() == A
        except SingularMatrixError:
            assert A.determinant() == E(0)


def test_matrix_power():
    B = ExactMatrix([[E(1), E(1, 1)], [E(0, -1), E(2)]])
    assert B**0 == ExactMatrix.identity(2)
    assert B**3 == B @ B @ B
    assert B**-2 == (B @ B).inverse()


def test_matrix_is_immutable():
    M = ExactMatrix.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3


def test_span_of_identity_is_scalars():
    assert span_dimension([ExactMatrix.identity(3)], 3) == 1


def test_span_of_distinct_diagonal_is_diagonal_algebra():
    assert span_dimension([ExactMatrix.diagonal([1, 2])], 2) == 2
    assert span_dimension([ExactMatrix.diagonal([1, 2, 3, 4])], 4) == 4
    # repeated eigenvalues collapse the span
    assert span_dimension([ExactMatrix.diagonal([1, 1, 2])], 3) == 2


def test_span_of_matrix_units_is_everything():
    up = ExactMatrix([[0, 1], [0, 0]])
    down = ExactMatrix([[0, 0], [1, 0]])
    assert span_dimension([up, down], 2) == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cycle_and_diagonal_generate_full_algebra(n):
    P = ExactMatrix([[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)])
    D = ExactMatrix.diagonal(list(range(1, n + 1)))
    assert span_dimension([P, D], n) == n * n


def test_span_monotone_and_bounded():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 4)
        gens = [random_matrix(rng, n, span=3) for _ in range(rng.randint(1, 2))]
        d = span_dimension(gens, n)
        assert 1 <= d <= n * n
        assert span_dimension(gens + [random_matrix(rng, n, span=3)], n) >= d


def test_span_rejects_wrong_shape():
    with pytest.raises(ValueError):
        span_dimension([ExactMatrix.identity(2)], 3)


def test_assemble_identity_blocks():
    lay = BlockLayout([("u", 2), ("v", 1)], [("u", 2), ("v", 1)])
    M = assemble_blocks(lay, {("u", "u"): IDENTITY, ("v", "v"): IDENTITY})
    assert M == ExactMatrix.identity(3)


def test_assemble_defaults_to_zero_blocks():
    lay = BlockLayout([("u", 2), ("v", 1)], [("u", 2), ("v", 1)])
    M = assemble_blocks(
        lay,
        {("u", "v"): ExactMatrix([[5], [6]]), ("v", "u"): ExactMatrix([[7, 8]]), ("v", "v"): ZERO},
    )
    assert M == ExactMatrix([[0, 0, 5], [0, 0, 6], [7, 8, 0]])


def test_assemble_errors_name_the_block():
    lay = BlockLayout([("u", 2), ("v", 1)], [("u", 2), ("v", 1)])
    with pytest.raises(ValueError, match=r"\('u', 'v'\)"):
        assemble_blocks(lay, {("u", "v"): ExactMatrix([[1, 2]])})
    with pytest.raises(ValueError, match=r"\('u', 'w'\)"):
        assemble_blocks(lay, {("u", "w"): IDENTITY})
    with pytest.raises(ValueError, match="identity"):
        assemble_blocks(BlockLayout([("a", 2)], [("a", 1)]), {("a", "a"): IDENTITY})


def test_json_round_trip():
    A = ExactMatrix([[E(Fraction(1, 3), Fraction(-1, 2)), E(2)], [RHO, E(0)]])
    payload = A.to_json_dict()
    assert payload["entries"][0][0] == "1/3-1/2r"
    assert ExactMatrix.from_json_dict(payload) == A


def test_json_rejects_bad_shape():
    with pytest.raises(ValueError):
        ExactMatrix.from_json_dict({"rows": 2, "cols": 2, "entries": [["1", "0"]]})
