"""Tests for monomial decomposition, Gram structure and involutions."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpcodes.errors import DimensionMismatchError, NotInvolutionError, NotMonomialError, OutOfRangeError
from mpcodes.field import FieldElement, FieldSpec
from mpcodes.matrix import ExactMatrix, identity
from mpcodes.special import (
    MonomialDecomposition,
    Permutation,
    check_involution_structure,
    enumerate_involutions,
    fixed_set,
    gram_euclidean,
    gram_hermitian,
    involution_count,
    is_monomial,
    is_nsc,
    monomial_decompose,
    row_prefix_distance,
    two_cycles,
)

GF4 = FieldSpec.from_order(4)
GF9 = FieldSpec.from_order(9)


def el(value: int) -> FieldElement:
    return FieldElement(GF4, value)


# =============================================================================
# Permutations
# =============================================================================


class TestPermutation:
    """Tests for the Permutation value type."""

    def test_parse_cycles(self):
        tau = Permutation.parse("(1 2)(3 4)", 4)
        assert tau.images == (2, 1, 4, 3)
        assert str(tau) == "(1 2)(3 4)"

    def test_identity_text(self):
        assert str(Permutation.parse("id", 3)) == "id"
        assert Permutation.identity(3).is_identity

    def test_compose_and_inverse(self):
        cycle = Permutation.parse("(1 2 3)", 3)
        assert cycle.compose(cycle.inverse()).is_identity
        assert cycle(1) == 2
        assert not cycle.is_involution

    def test_invalid_images(self):
        with pytest.raises(OutOfRangeError):
            Permutation((1, 1))

    def test_bad_cycle_text(self):
        with pytest.raises(OutOfRangeError):
            Permutation.parse("(1 5)", 3)
        with pytest.raises(OutOfRangeError):
            Permutation.parse("1 2", 3)

    def test_matrix(self):
        """P_tau has entry (i, tau(i)) equal to 1."""
        assert Permutation((2, 3, 1)).matrix(GF4).to_ints() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


# =============================================================================
# Monomial decomposition
# =============================================================================


class TestMonomialDecompose:
    """Tests for M = D·P_tau."""

    def test_antidiagonal(self):
        """[[0, ω], [ω², 0]] has tau = (1 2) and mu = (ω, ω²)."""
        d = monomial_decompose(ExactMatrix.from_rows(GF4, [[0, 2], [3, 0]]))
        assert str(d.perm) == "(1 2)"
        assert d.mu(1) == el(2)
        assert d.mu(2) == el(3)
        assert d.reconstruct().to_ints() == [[0, 2], [3, 0]]

    def test_not_monomial(self):
        with pytest.raises(NotMonomialError):
            monomial_decompose(ExactMatrix.from_rows(GF4, [[1, 1], [0, 1]]))
        with pytest.raises(NotMonomialError):
            monomial_decompose(ExactMatrix.from_rows(GF4, [[0, 0], [0, 0]]))

    def test_column_collision(self):
        """Each row has one entry but both sit in column 1."""
        with pytest.raises(NotMonomialError):
            monomial_decompose(ExactMatrix.from_rows(GF4, [[1, 0], [2, 0]]))

    def test_non_square(self):
        with pytest.raises(DimensionMismatchError):
            monomial_decompose(ExactMatrix.from_rows(GF4, [[1, 0, 0]]))
        assert not is_monomial(ExactMatrix.from_rows(GF4, [[1, 0, 0]]))


class TestGram:
    """Tests for Gram matrices and their involution structure."""

    def test_hermitian_gram_is_monomial(self, omega_matrix):
        gram = gram_hermitian(omega_matrix)
        d = monomial_decompose(gram)
        assert gram.to_ints() == [[0, 2], [3, 0]]
        assert check_involution_structure(d, "conj_transpose").ok

    def test_euclidean_gram(self, omega_matrix):
        """Rows (1, 1), (1, ω): products 0, ω², ω."""
        assert gram_euclidean(omega_matrix).to_ints() == [[0, 3], [3, 2]]

    def test_three_cycle_fails(self):
        d = MonomialDecomposition((el(1), el(1), el(1)), Permutation((2, 3, 1)))
        check = check_involution_structure(d, "transpose")
        assert not check.ok
        assert check.reason == "tau_squared"
        assert check.index == 1

    def test_diagonal_relation(self):
        """mu = (ω, ω) on (1 2) is symmetric but not conjugate-symmetric."""
        d = MonomialDecomposition((el(2), el(2)), Permutation((2, 1)))
        assert check_involution_structure(d, "transpose").ok
        check = check_involution_structure(d, "conj_transpose")
        assert check.reason == "diagonal_relation"
        assert check.index == 1


# =============================================================================
# NSC and row prefixes
# =============================================================================


class TestNSC:
    """Tests for non-singular-by-columns matrices."""

    def test_omega_matrix_is_nsc(self, omega_matrix):
        assert is_nsc(omega_matrix)

    def test_identity_is_not_nsc(self):
        """The first row of I_2 has a zero entry."""
        assert not is_nsc(identity(GF4, 2))

    def test_tall_matrix(self):
        with pytest.raises(DimensionMismatchError):
            is_nsc(ExactMatrix.from_rows(GF4, [[1], [1]]))

    def test_row_prefix_distance(self, omega_matrix):
        assert row_prefix_distance(omega_matrix, 1) == 2
        assert row_prefix_distance(omega_matrix, 2) == 1
        with pytest.raises(OutOfRangeError):
            row_prefix_distance(omega_matrix, 3)


# =============================================================================
# Involutions
# =============================================================================


class TestInvolutions:
    """Tests for involution enumeration and counting."""

    def test_order_for_three(self):
        """Identity first, then lexicographic by images."""
        assert [str(t) for t in enumerate_involutions(3)] == ["id", "(2 3)", "(1 2)", "(1 3)"]

    @pytest.mark.parametrize("k,expected", [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26), (6, 76)])
    def test_counts(self, k, expected):
        assert len(enumerate_involutions(k)) == expected
        assert involution_count(k) == expected

    def test_nontrivial_count(self):
        assert involution_count(4, include_identity=False) == 9

    def test_all_are_involutions(self):
        assert all(t.is_involution for t in enumerate_involutions(6))

    def test_range(self):
        with pytest.raises(OutOfRangeError):
            enumerate_involutions(0)
        with pytest.raises(OutOfRangeError):
            enumerate_involutions(13)

    def test_fixed_set_and_cycles(self):
        tau = Permutation.parse("(1 3)", 4)
        assert fixed_set(tau) == [2, 4]
        assert two_cycles(tau) == [(1, 3)]

    def test_not_involution(self):
        with pytest.raises(NotInvolutionError):
            fixed_set(Permutation.parse("(1 2 3)", 3))


# =============================================================================
# Round trips and exhaustive scans
# =============================================================================


class TestMonomialRoundTrip:
    """D·P_tau built from random (mu, tau) decomposes back to (mu, tau)."""

    @settings(derandomize=True, deadline=None, max_examples=60)
    @given(
        st.integers(1, 6).flatmap(
            lambda k: st.tuples(
                st.permutations(list(range(1, k + 1))),
                st.lists(st.integers(1, 8), min_size=k, max_size=k),
            )
        )
    )
    def test_round_trip(self, case):
        images, mu = case
        d = MonomialDecomposition(
            tuple(FieldElement(GF9, v) for v in mu), Permutation(tuple(images))
        )
        m = d.reconstruct()
        assert is_monomial(m)
        assert monomial_decompose(m) == d


class TestNSCPrefixDistances:
    """Every prefix code of an NSC matrix is MDS: D_i(A) = t - i + 1."""

    def test_all_two_by_two(self):
        found = 0
        for values in itertools.product(range(4), repeat=4):
            a = ExactMatrix.from_rows(GF4, [list(values[:2]), list(values[2:])])
            if not is_nsc(a):
                continue
            found += 1
            assert [row_prefix_distance(a, i) for i in (1, 2)] == [2, 1]
        # 9 nonzero first rows, 12 second rows off their span
        assert found == 108

    @pytest.mark.slow
    def test_all_three_by_three(self):
        nonzero_rows = [list(r) for r in itertools.product(range(1, 4), repeat=3)]
        all_rows = [list(r) for r in itertools.product(range(4), repeat=3)]
        found = 0
        for r1 in nonzero_rows:
            for r2 in all_rows:
                if not is_nsc(ExactMatrix.from_rows(GF4, [r1, r2])):
                    continue
                for r3 in all_rows:
                    a = ExactMatrix.from_rows(GF4, [r1, r2, r3])
                    if not is_nsc(a):
                        continue
                    found += 1
                    assert [row_prefix_distance(a, i) for i in (1, 2, 3)] == [3, 2, 1]
        # 27 first rows, 24 second rows with distinct column ratios, 48 third rows off the span
        assert found == 27 * 24 * 48
