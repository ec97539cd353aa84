"""Extreme-point predicates, enumerators, and the rank oracle."""

import random
from fractions import Fraction

import pytest

from centrostoch import (
    EnumerationCapError,
    Matrix,
    NotCentrosymmetricError,
    NotStochasticError,
    RectPermMatrix,
    ShapeError,
    enumerate_extreme_centro,
    enumerate_extreme_stochastic,
    is_centrosymmetric,
    is_extreme_centro,
    is_extreme_oracle,
    is_extreme_stochastic,
    is_stochastic,
)
from matrixgen import random_centro_stochastic, random_stochastic

HALF = Fraction(1, 2)

S = Matrix([[1, 0, 0, 0], [0, "1/2", "1/2", 0], [0, 0, 0, 1]])


def paired_with_rotation(r: RectPermMatrix) -> Matrix:
    return (r.to_matrix() + r.rotate_pi().to_matrix()) * HALF


def brute_centro_extremes(m: int, n: int) -> set:
    # every centrosymmetric extreme point is a half-sum of a rectangular
    # permutation matrix with its rotation; filter those with the oracle
    found = set()
    for r in enumerate_extreme_stochastic(m, n):
        candidate = paired_with_rotation(r)
        if candidate in found:
            continue
        if is_extreme_oracle(candidate, centro=True):
            found.add(candidate)
    return found


class TestStructuralPredicates:
    def test_rect_perm_matrices_are_extreme(self):
        assert is_extreme_stochastic(Matrix.identity(3))
        assert is_extreme_stochastic(Matrix([[0, 1], [0, 1], [1, 0]]))

    def test_non_extreme_stochastic(self):
        assert not is_extreme_stochastic(Matrix([["1/2", "1/2"]]))
        assert not is_extreme_stochastic(Matrix([[1, 1]]))
        assert not is_extreme_stochastic(Matrix([[0, 0]]))

    def test_centro_even(self):
        assert is_extreme_centro(Matrix([[1, 0], [0, 1]]))
        assert not is_extreme_centro(Matrix([["1/2", "1/2"], ["1/2", "1/2"]]))
        # extreme in the stochastic polytope but not centrosymmetric
        assert not is_extreme_centro(Matrix([[1, 0], [1, 0]]))

    def test_centro_odd_half_pair_center(self):
        assert is_extreme_centro(S)
        bad_center = Matrix(
            [[1, 0, 0, 0], [0, "1/4", "3/4", 0], [0, 0, 0, 1]]
        )
        assert not is_extreme_centro(bad_center)

    def test_centro_odd_unit_center(self):
        assert is_extreme_centro(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        # the unit must sit on the middle column
        assert not is_extreme_centro(Matrix([[0, 0, 1], [1, 0, 0], [1, 0, 0]]))

    def test_centro_odd_rejects_spread_center(self):
        spread = Matrix(
            [[1, 0, 0, 0], ["1/4", "1/4", "1/4", "1/4"], [0, 0, 0, 1]]
        )
        assert not is_extreme_centro(spread)

    def test_non_stochastic_is_not_extreme(self):
        assert not is_extreme_centro(Matrix([[2, -1], [-1, 2]]))


class TestEnumerateStochastic:
    def test_counts(self):
        assert len(list(enumerate_extreme_stochastic(1, 3))) == 3
        assert len(list(enumerate_extreme_stochastic(2, 2))) == 4
        assert len(list(enumerate_extreme_stochastic(3, 4))) == 64

    def test_lexicographic_and_distinct(self):
        mats = list(enumerate_extreme_stochastic(2, 3))
        assert [r.row_to_col for r in mats[:4]] == [
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 1),
        ]
        assert len(set(mats)) == len(mats)

    def test_all_terms_extreme(self):
        for r in enumerate_extreme_stochastic(2, 3):
            assert is_extreme_stochastic(r.to_matrix())

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_extreme_stochastic(10, 10, cap=100)

    def test_bad_sizes(self):
        with pytest.raises(ShapeError):
            enumerate_extreme_stochastic(0, 3)


class TestEnumerateCentro:
    def test_even_counts(self):
        assert len(list(enumerate_extreme_centro(2, 2))) == 2
        assert len(list(enumerate_extreme_centro(4, 3))) == 9

    def test_odd_counts(self):
        assert len(list(enumerate_extreme_centro(1, 4))) == 2
        assert len(list(enumerate_extreme_centro(3, 2))) == 2
        assert len(list(enumerate_extreme_centro(3, 3))) == 6
        assert len(list(enumerate_extreme_centro(5, 4))) == 32

    def test_members_are_centro_stochastic_extremes(self):
        for mat in enumerate_extreme_centro(5, 4):
            assert is_stochastic(mat)
            assert is_centrosymmetric(mat)
            assert is_extreme_centro(mat)
            assert all(
                x in (0, HALF, 1) for row in mat.entries for x in row
            )

    def test_distinct(self):
        mats = list(enumerate_extreme_centro(5, 3))
        assert len(set(mats)) == len(mats)

    def test_matches_oracle_brute_force(self):
        for m in range(1, 5):
            for n in range(1, 4):
                enumerated = set(enumerate_extreme_centro(m, n))
                assert enumerated == brute_centro_extremes(m, n)

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_extreme_centro(9, 9, cap=10)

    def test_bad_sizes(self):
        with pytest.raises(ShapeError):
            enumerate_extreme_centro(2, 0)


class TestOracle:
    def test_agrees_on_rect_perm(self):
        assert is_extreme_oracle(Matrix.identity(3))
        assert is_extreme_oracle(Matrix([[0, 1], [0, 1]]))

    def test_rejects_interior_point(self):
        assert not is_extreme_oracle(Matrix([["1/2", "1/2"]]))

    def test_centro_mode_on_s(self):
        assert is_extreme_oracle(S, centro=True)
        # S is not extreme among plain stochastic matrices
        assert not is_extreme_oracle(S)

    def test_preconditions(self):
        with pytest.raises(NotStochasticError):
            is_extreme_oracle(Matrix([[1, 1]]))
        with pytest.raises(NotCentrosymmetricError):
            is_extreme_oracle(Matrix([[1, 0], [1, 0]]), centro=True)

    def test_agreement_with_structural_predicate(self):
        # both routes on every half-sum candidate, including non-extremes
        for m, n in [(2, 3), (3, 3), (3, 4)]:
            for r in enumerate_extreme_stochastic(m, n):
                candidate = paired_with_rotation(r)
                assert is_extreme_oracle(candidate, centro=True) == is_extreme_centro(
                    candidate
                )

    def test_agreement_on_random_centro_matrices(self):
        rng = random.Random(405)
        for _ in range(40):
            m, n = rng.randint(1, 5), rng.randint(1, 4)
            a = random_centro_stochastic(rng, m, n)
            assert is_extreme_oracle(a, centro=True) == is_extreme_centro(a)

    def test_agreement_on_random_stochastic_matrices(self):
        rng = random.Random(406)
        for _ in range(40):
            m, n = rng.randint(1, 5), rng.randint(1, 4)
            a = random_stochastic(rng, m, n)
            assert is_extreme_oracle(a) == is_extreme_stochastic(a)
