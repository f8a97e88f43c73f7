from math import factorial

import pytest

from conjiso.characters import (
    ClassFunction,
    character_table,
    chi_via_determinantal,
    determinantal_expansion,
    dimension,
    xi_bruteforce,
    xi_on_class,
    xi_two_row,
)
from conjiso.combinatorics import (
    Partition,
    class_representative,
    class_size,
    dominates,
    partitions_of,
)

import oracles


def test_xi_examples():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert xi_on_class((n,), lam) == 1
    assert xi_on_class((3, 1), (1, 1, 1, 1)) == 4
    assert xi_on_class((2, 2), (2, 2)) == 2
    with pytest.raises(ValueError):
        xi_on_class((2, 2), (3, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_xi_matches_tabloid_enumeration(n):
    for beta in partitions_of(n):
        for lam in partitions_of(n):
            sigma = class_representative(lam)
            expected = oracles.fixed_tabloids(beta, sigma)
            assert xi_on_class(beta, lam) == expected
            assert xi_bruteforce(beta, sigma) == expected


def test_xi_bruteforce_examples():
    assert xi_bruteforce((4,), (2, 3, 4, 1)) == 1
    assert xi_bruteforce((2, 2), (2, 1, 4, 3)) == 2
    with pytest.raises(ValueError):
        xi_bruteforce((2, 2, 2, 1, 1), (1, 2, 3, 4, 5, 6, 7, 8))


def test_xi_two_row_examples():
    assert xi_two_row(0, (3, 2)) == 1
    for lam in partitions_of(7):
        assert xi_two_row(1, lam) == lam.multiplicity(1)
    assert xi_two_row(2, (2, 2)) == 2


@pytest.mark.parametrize("n", range(1, 11))
def test_xi_two_row_agrees_with_dp(n):
    for s in range(n // 2 + 1):
        shape = (n - s, s) if s else (n,)
        for lam in partitions_of(n):
            assert xi_two_row(s, lam) == xi_on_class(shape, lam)


def test_determinantal_examples():
    assert determinantal_expansion((6,)).terms == {(6,): 1}
    assert determinantal_expansion((5, 1)).terms == {(5, 1): 1, (6,): -1}
    assert determinantal_expansion((2, 2)).terms == {(2, 2): 1, (3, 1): -1}
    with pytest.raises(ValueError):
        determinantal_expansion((2,) * 5)


def test_hook_character_is_fix_minus_one():
    for n in range(2, 7):
        for lam in partitions_of(n):
            assert chi_via_determinantal((n - 1, 1), lam) == lam.multiplicity(1) - 1


def test_determinantal_support_and_coefficient_bound():
    for n in range(1, 11):
        for alpha in partitions_of(n):
            u = n - alpha[0]
            if u > 4:
                continue
            exp = determinantal_expansion(alpha)
            assert all(dominates(b, alpha) and c for b, c in exp.terms.items())
            assert exp.abs_coefficient_sum() <= factorial(u + 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_determinantal_matches_mn(n):
    table = character_table(n)
    for alpha in partitions_of(n):
        if n - alpha[0] > 4:
            continue
        for lam in partitions_of(n):
            assert chi_via_determinantal(alpha, lam) == table[alpha, lam]


def test_table_examples():
    for n in range(1, 10):
        table = character_table(n)
        assert set(table.row((n,))) == {1}
        sign = table.row((1,) * n)
        for lam in partitions_of(n):
            assert sign[lam] == (-1) ** (n - len(lam))
            assert sign[lam] == oracles_sign(class_representative(lam))
    with pytest.raises(ValueError):
        character_table(15)


def oracles_sign(sigma):
    return (-1) ** sum(l - 1 for l in oracles.cycle_lengths(sigma))


def test_character_table_s4_frozen():
    # rows (4), (3,1), (2,2), (2,1,1), (1^4); columns in the same order
    assert character_table(4).values == (
        (1, 1, 1, 1, 1),
        (-1, 0, -1, 1, 3),
        (0, -1, 2, 0, 2),
        (1, 0, -1, -1, 3),
        (-1, 1, 1, -1, 1),
    )


@pytest.mark.parametrize("n", range(1, 11))
def test_orthonormality(n):
    table = character_table(n).values
    sizes = [class_size(l) for l in partitions_of(n)]
    for a, ra in enumerate(table):
        for b, rb in enumerate(table):
            inner = sum(s * x * y for s, x, y in zip(sizes, ra, rb))
            assert inner == (factorial(n) if a == b else 0)


def test_degrees_match_hook_formula():
    for n in range(1, 13):
        table = character_table(n)
        for alpha in partitions_of(n):
            assert table[alpha, (1,) * n] == dimension(alpha)


def test_class_function_shape():
    with pytest.raises(ValueError):
        ClassFunction(4, (1, 2, 3))
    cf = character_table(5).row((4, 1))
    assert len(cf) == 7 and cf[(1,) * 5] == 4


@pytest.mark.parametrize("n", range(2, 10))
def test_collapse_inequality(n):
    for beta in partitions_of(n):
        b1 = beta[0]
        for lam in partitions_of(n):
            assert xi_on_class(beta, lam) <= factorial(n - b1) * xi_two_row(n - b1, lam)


@pytest.mark.parametrize("n", range(2, 10))
def test_character_bounded_by_permutation_characters(n):
    table = character_table(n)
    for alpha in partitions_of(n):
        if n - alpha[0] > 4:
            continue
        terms = determinantal_expansion(alpha).terms
        for lam in partitions_of(n):
            assert abs(table[alpha, lam]) <= sum(abs(c) * xi_on_class(b, lam) for b, c in terms.items())


def test_partition_normalisation_in_xi():
    # shapes given out of order are normalised
    assert xi_on_class(Partition([1, 3]), (2, 1, 1)) == xi_on_class((3, 1), (2, 1, 1))
