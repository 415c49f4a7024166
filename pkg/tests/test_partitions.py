from itertools import combinations

import pytest

from nilcalc import (
    EmptyInputError,
    InvalidPartError,
    Partition,
    SizeMismatchError,
    conjugate,
    dominates,
    join,
    jordan_matrix,
    make_partition,
    meet,
    min_element,
    partitions_of,
)

P = make_partition


def lower_bounds(mu, nu, universe):
    return [g for g in universe if dominates(g, mu) and dominates(g, nu)]


def upper_bounds(mu, nu, universe):
    return [g for g in universe if dominates(mu, g) and dominates(nu, g)]


def test_make_partition_normalizes():
    assert P([1, 3, 2]).parts == (3, 2, 1)
    assert P([]).parts == ()
    assert P([]).n == 0


def test_make_partition_rejects_nonpositive():
    with pytest.raises(InvalidPartError):
        P([2, 0])
    with pytest.raises(InvalidPartError):
        P([-1])


def test_partition_constructor_requires_canonical_order():
    with pytest.raises(InvalidPartError):
        Partition([1, 2])


def test_out_of_range_parts_read_as_zero():
    mu = P([3, 1])
    assert mu[0] == 3 and mu[1] == 1
    assert mu[2] == 0 and mu[100] == 0


def test_conjugate_examples():
    assert conjugate(P([5])).parts == (1, 1, 1, 1, 1)
    assert conjugate(P([2, 1])) == P([2, 1])
    # defining count: mu^T_i = |{j : mu_j >= i}|
    mu = P([3, 1])
    expected = [len([v for v in mu if v >= i]) for i in range(1, 4)]
    assert expected == [2, 1, 1]
    assert conjugate(mu) == P(expected)


def test_conjugate_is_order_reversing_involution():
    for n in range(9):
        parts = list(partitions_of(n))
        for mu in parts:
            assert conjugate(conjugate(mu)) == mu
        for mu in parts:
            for nu in parts:
                assert dominates(mu, nu) == dominates(conjugate(nu), conjugate(mu))


def test_dominates_examples():
    assert dominates(P([1, 1, 1]), P([3]))
    assert not dominates(P([2, 2, 2]), P([3, 1, 1, 1]))
    assert not dominates(P([3, 1, 1, 1]), P([2, 2, 2]))
    mu = P([4, 2, 1])
    assert dominates(mu, mu)


def test_dominates_rejects_different_sizes():
    with pytest.raises(SizeMismatchError):
        dominates(P([2]), P([2, 1]))
    with pytest.raises(SizeMismatchError):
        meet(P([2]), P([2, 1]))
    with pytest.raises(SizeMismatchError):
        join(P([2]), P([2, 1]))


def test_dominance_is_a_partial_order():
    for n in range(1, 8):
        parts = list(partitions_of(n))
        for mu in parts:
            assert dominates(mu, mu)
        for mu, nu in combinations(parts, 2):
            assert not (dominates(mu, nu) and dominates(nu, mu))
        for mu in parts:
            for nu in parts:
                for rho in parts:
                    if dominates(mu, nu) and dominates(nu, rho):
                        assert dominates(mu, rho)


def test_meet_example_is_glb_by_brute_force():
    mu, nu = P([3, 1, 1, 1]), P([2, 2, 2])
    got = meet(mu, nu)
    assert got == P([2, 2, 1, 1])
    universe = list(partitions_of(6))
    lbs = lower_bounds(mu, nu, universe)
    assert got in lbs
    assert all(dominates(g, got) for g in lbs)


def test_meet_join_basic():
    mu = P([4, 2, 1])
    assert meet(mu, mu) == mu
    assert join(mu, mu) == mu
    assert join(P([2, 2]), P([3, 1])) == P([3, 1])  # [2,2] <= [3,1]
    assert meet(P([2, 2]), P([3, 1])) == P([2, 2])


def test_meet_join_are_lattice_operations():
    for n in range(1, 8):
        universe = list(partitions_of(n))
        for mu in universe:
            for nu in universe:
                m = meet(mu, nu)
                j = join(mu, nu)
                lbs = lower_bounds(mu, nu, universe)
                ubs = upper_bounds(mu, nu, universe)
                assert m in lbs and all(dominates(g, m) for g in lbs)
                assert j in ubs and all(dominates(j, g) for g in ubs)
                assert j == conjugate(meet(conjugate(mu), conjugate(nu)))


def test_min_element():
    assert min_element([P([3]), P([2, 1])]) == P([2, 1])
    assert min_element([P([2, 2, 2]), P([3, 1, 1, 1])]) is None
    assert min_element([P([4, 1])]) == P([4, 1])
    with pytest.raises(EmptyInputError):
        min_element([])


def test_partitions_of_counts():
    # p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected):
        assert len(list(partitions_of(n))) == count
    for mu in partitions_of(9):
        assert mu.n == 9


def test_jordan_matrix_shapes():
    z = jordan_matrix(P([1, 1]))
    assert z.rows == z.cols == 2 and z.is_zero()
    j2 = jordan_matrix(P([2]))
    assert j2.entries == ((0, 1), (0, 0))
    j21 = jordan_matrix(P([2, 1]))
    assert j21.entries == ((0, 1, 0), (0, 0, 0), (0, 0, 0))
    assert jordan_matrix(P([])).rows == 0
