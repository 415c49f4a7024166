from fractions import Fraction

import pytest

from conftest import conjugate_by, naive_rank, random_int_matrix, random_invertible, random_rational_matrix
from nilcalc import (
    DomainMismatchError,
    ExactMatrix,
    NotNilpotentError,
    NotUnipotentError,
    ParseError,
    SingularMatrixError,
    SizeMismatchError,
    UnsupportedDomainError,
    direct_sum,
    identity,
    is_nilpotent,
    jordan_matrix,
    jordan_type,
    kron,
    make_partition,
    mat_add,
    mat_inv,
    mat_mul,
    mat_pow,
    mat_sub,
    matrix_from_json,
    matrix_to_json,
    rank,
    scalar_mul,
    unipotent_log,
    zeros,
)

P = make_partition


def exp_series(n: ExactMatrix) -> ExactMatrix:
    """Finite exponential of a nilpotent matrix (test-side helper)."""
    total = identity(n.rows)
    term = identity(n.rows)
    k = 1
    while True:
        term = scalar_mul(Fraction(1, k), mat_mul(term, n))
        if term.is_zero():
            return total
        total = mat_add(total, term)
        k += 1


def test_entries_normalized():
    m = ExactMatrix([[Fraction(2, 2), Fraction(1, 3)], [0, 4]])
    assert m.entries[0][0] == 1 and isinstance(m.entries[0][0], int)
    assert m.entries[0][1] == Fraction(1, 3)
    f = ExactMatrix([[7, -1]], modulus=5)
    assert f.entries == ((2, 4),)


def test_modulus_must_be_prime():
    with pytest.raises(UnsupportedDomainError):
        ExactMatrix([[1]], modulus=6)


def test_rank_examples():
    assert rank(identity(4)) == 4
    assert rank(zeros(3, 3)) == 0
    assert rank(jordan_matrix(P([3]))) == 2


def test_rank_matches_naive_oracle_randomized(rng):
    for _ in range(60):
        r = rng.randint(1, 7)
        c = rng.randint(1, 7)
        m = random_rational_matrix(rng, r, c)
        assert rank(m) == naive_rank(m)
    # rank-deficient products
    for _ in range(30):
        n = rng.randint(2, 6)
        k = rng.randint(1, n - 1)
        m = mat_mul(random_int_matrix(rng, n, k), random_int_matrix(rng, k, n))
        assert rank(m) == naive_rank(m)
        assert rank(m) <= k
    for _ in range(30):
        m = ExactMatrix(
            [[rng.randrange(5) for _ in range(5)] for _ in range(4)], modulus=5
        )
        assert rank(m) == naive_rank(m)


def test_arithmetic_shapes_and_errors(rng):
    a = random_int_matrix(rng, 2, 3)
    b = random_int_matrix(rng, 3, 2)
    assert mat_mul(a, b).rows == 2
    with pytest.raises(SizeMismatchError):
        mat_mul(a, a)
    with pytest.raises(SizeMismatchError):
        mat_add(a, b)
    with pytest.raises(DomainMismatchError):
        mat_add(identity(2), identity(2, modulus=3))
    with pytest.raises(DomainMismatchError):
        kron(identity(2), identity(2, modulus=3))


def test_mat_pow():
    j = jordan_matrix(P([2]))
    assert mat_pow(j, 0) == identity(2)
    assert mat_pow(j, 2).is_zero()
    a = ExactMatrix([[1, 1], [0, 1]])
    assert mat_pow(a, 3) == ExactMatrix([[1, 3], [0, 1]])


def test_kron_rank_multiplicative(rng):
    assert rank(kron(identity(2), jordan_matrix(P([2])))) == 2
    for _ in range(25):
        a = random_rational_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        b = random_rational_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert rank(kron(a, b)) == rank(a) * rank(b)


def test_direct_sum_block_diagonal():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = identity(3)
    d = direct_sum(a, b)
    assert (d.rows, d.cols) == (5, 5)
    assert d.entries[0][:2] == (1, 2) and d.entries[0][2:] == (0, 0, 0)
    assert d.entries[2] == (0, 0, 1, 0, 0)


def test_is_nilpotent():
    for mu in ([3, 2], [1, 1, 1], [5]):
        assert is_nilpotent(jordan_matrix(P(mu)))
    assert not is_nilpotent(identity(3))
    m = ExactMatrix([[0, 1], [-1, 0]])
    assert mat_pow(m, 2) == scalar_mul(-1, identity(2))
    assert not is_nilpotent(m)
    with pytest.raises(SizeMismatchError):
        is_nilpotent(zeros(2, 3))


def test_jordan_type_round_trip():
    assert jordan_type(zeros(4, 4)) == P([1, 1, 1, 1])
    for mu in ([2, 1], [3, 2], [4, 4, 1], [1], [6, 3, 3, 1]):
        assert jordan_type(jordan_matrix(P(mu))) == P(mu)


def test_jordan_type_conjugation_invariant(rng):
    for mu in ([3, 2], [2, 2, 1], [4, 1]):
        n = sum(mu)
        for _ in range(5):
            p = random_invertible(rng, n)
            assert jordan_type(conjugate_by(p, jordan_matrix(P(mu)))) == P(mu)


def test_jordan_type_rejects_non_nilpotent():
    with pytest.raises(NotNilpotentError):
        jordan_type(identity(3))
    with pytest.raises(NotNilpotentError):
        jordan_type(ExactMatrix([[0, 1], [-1, 0]]))


def test_jordan_type_over_prime_field():
    j = ExactMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], modulus=2)
    assert jordan_type(j) == P([2, 1])


def test_unipotent_log_examples():
    assert unipotent_log(identity(3)).is_zero()
    m = ExactMatrix([[1, 1], [0, 1]])
    assert unipotent_log(m) == ExactMatrix([[0, 1], [0, 0]])
    n3 = jordan_matrix(P([3]))
    assert unipotent_log(exp_series(n3)) == n3


def test_unipotent_log_errors():
    with pytest.raises(NotUnipotentError):
        unipotent_log(scalar_mul(2, identity(2)))
    with pytest.raises(UnsupportedDomainError):
        unipotent_log(identity(2, modulus=5))


def test_log_type_equals_offset_type(rng):
    for mu in ([2, 1], [3, 1], [2, 2]):
        n = sum(mu)
        u = mat_add(identity(n), jordan_matrix(P(mu)))
        for _ in range(5):
            p = random_invertible(rng, n)
            m = conjugate_by(p, u)
            assert jordan_type(unipotent_log(m)) == jordan_type(mat_sub(m, identity(n)))


def test_mat_inv_round_trip(rng):
    for _ in range(10):
        n = rng.randint(1, 5)
        m = random_invertible(rng, n)
        assert mat_mul(m, mat_inv(m)) == identity(n)
    f = ExactMatrix([[1, 2], [3, 4]], modulus=5)
    assert mat_mul(f, mat_inv(f)) == identity(2, modulus=5)
    with pytest.raises(SingularMatrixError):
        mat_inv(zeros(2, 2))


def test_matrix_json_round_trip():
    m = ExactMatrix([[Fraction(1, 2), 3], [0, Fraction(-7, 3)]])
    doc = matrix_to_json(m)
    assert doc["entries"][0][0] == "1/2" and doc["entries"][0][1] == 3
    assert matrix_from_json(doc) == m
    f = ExactMatrix([[1, 4], [2, 2]], modulus=5)
    doc = matrix_to_json(f)
    assert doc["modulus"] == 5
    assert matrix_from_json(doc) == f


def test_matrix_json_errors():
    with pytest.raises(ParseError):
        matrix_from_json({"entries": [[1]], "rows": 3})
    with pytest.raises(SizeMismatchError):
        matrix_from_json({"entries": [[1], [2, 3]]})
    with pytest.raises(ParseError):
        matrix_from_json({"entries": [["1/0"]]})
    with pytest.raises(ParseError):
        matrix_from_json([1, 2])
    with pytest.raises(ParseError):
        matrix_from_json({"entries": [["1/2"]], "modulus": 5})
