"""Tests for linear codes and their Hermitian geometry."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpcodes.codes import (
    MinDistance,
    all_codes,
    classify_single,
    contains,
    dim_meet_hermitian_dual,
    euclidean_dual,
    from_generator,
    full_space,
    hermitian_dual,
    hermitian_hull,
    hull_dimension,
    intersect,
    is_mds,
    min_distance,
    random_code,
    sum_code,
    zero_code,
)
from mpcodes.errors import DimensionMismatchError, EnumerationCapError, OutOfRangeError
from mpcodes.field import FieldSpec
from mpcodes.matrix import ExactMatrix
from mpcodes.models import CodeProperty as P
from tests.conftest import make_code

GF4 = FieldSpec.from_order(4)
GF9 = FieldSpec.from_order(9)


# =============================================================================
# Canonical form
# =============================================================================


class TestCanonicalForm:
    """Tests for generator canonicalization."""

    def test_scaled_rows_collapse(self):
        """[[ω, ω], [1, 1]] spans the same line as (1, 1)."""
        c = from_generator(ExactMatrix.from_rows(GF4, [[2, 2], [1, 1]]))
        assert c.dimension == 1
        assert c.generator.to_ints() == [[1, 1]]

    def test_equal_subspaces_are_equal(self):
        a = make_code(GF9, [[1, 3, 0], [0, 1, 1]], 3)
        b = make_code(GF9, [[1, 4, 1], [0, 1, 1]], 3)
        assert a == b
        assert hash(a) == hash(b)

    def test_zero_and_full(self):
        assert zero_code(GF4, 3).is_zero
        assert full_space(GF4, 3).dimension == 3


# =============================================================================
# Duals, hulls and containment
# =============================================================================


class TestDuals:
    """Tests for Euclidean and Hermitian duals."""

    def test_hermitian_dual_of_diagonal(self, diagonal_code):
        """(1, 1) is Hermitian self-orthogonal over GF(4)."""
        assert hermitian_dual(diagonal_code) == diagonal_code

    def test_hermitian_dual_of_axis(self, axis_code):
        assert hermitian_dual(axis_code).generator.to_ints() == [[0, 1]]

    def test_dual_dimensions(self, full2, zero2):
        assert hermitian_dual(full2).is_zero
        assert hermitian_dual(zero2) == full2

    def test_euclidean_differs_from_hermitian(self):
        """<(1, ω)>: Euclidean dual <(ω, 1)>, Hermitian dual <(ω², 1)>."""
        c = make_code(GF4, [[1, 2]], 2)
        assert euclidean_dual(c) == make_code(GF4, [[2, 1]], 2)
        assert hermitian_dual(c) == make_code(GF4, [[3, 1]], 2)

    def test_length_mismatch(self, diagonal_code):
        with pytest.raises(DimensionMismatchError):
            contains(diagonal_code, full_space(GF4, 3))


class TestHulls:
    """Tests for hull dimensions and intersections."""

    def test_hull_dimension(self, diagonal_code, axis_code, full2):
        assert hull_dimension(diagonal_code) == 1
        assert hull_dimension(axis_code) == 0
        assert hull_dimension(full2) == 0

    def test_hull_of_all_ones_length_three(self):
        """<(1, 1, 1)> has norm 1 + 1 + 1 = 1, so a trivial hull."""
        c = make_code(GF4, [[1, 1, 1]], 3)
        assert hermitian_hull(c).is_zero

    def test_intersection(self, axis_code):
        other = make_code(GF4, [[0, 1]], 2)
        assert intersect(axis_code, other).is_zero
        assert sum_code(axis_code, other) == full_space(GF4, 2)

    def test_distinct_lines_meet_trivially(self, diagonal_code):
        """<(1, 1)> and <(1, ω)> are different lines in GF(4)^2."""
        other = make_code(GF4, [[1, 2]], 2)
        assert intersect(diagonal_code, other).is_zero
        assert not contains(diagonal_code, other)

    def test_double_dual(self):
        for c in all_codes(GF4, 3):
            assert hermitian_dual(hermitian_dual(c)) == c

    def test_containment(self, diagonal_code, full2, zero2):
        assert contains(full2, diagonal_code)
        assert contains(diagonal_code, zero2)
        assert not contains(diagonal_code, full2)

    @settings(derandomize=True, deadline=None, max_examples=40)
    @given(st.integers(0, 2**31 - 1), st.integers(0, 3), st.integers(0, 3))
    def test_meet_dimension_identity(self, seed, t1, t2):
        """dim(C1 ∩ C2^⊥H) by rank matches the explicit intersection."""
        rng = np.random.default_rng(seed)
        c1 = random_code(GF9, 3, t1, rng)
        c2 = random_code(GF9, 3, t2, rng)
        assert dim_meet_hermitian_dual(c1, c2) == intersect(c1, hermitian_dual(c2)).dimension


# =============================================================================
# Classification
# =============================================================================


class TestClassifySingle:
    """Tests for single-code Hermitian flags."""

    def test_self_dual(self, diagonal_code):
        assert classify_single(diagonal_code) == {P.HDC, P.HSO, P.HSD}

    def test_trivial_hull_line(self, axis_code):
        """Hull 0 = dim - 1 = dual dim - 1."""
        assert classify_single(axis_code) == {P.AHDC, P.AHSO, P.HLCD}

    def test_full_space(self, full2):
        assert classify_single(full2) == {P.HDC, P.HLCD}

    def test_zero_code(self, zero2):
        """Zero code: self-orthogonal with trivial hull, never dual-containing."""
        assert classify_single(zero2) == {P.HSO, P.HLCD}

    def test_hdc_and_ahdc_exclusive(self):
        for c in all_codes(GF4, 3):
            flags = classify_single(c)
            assert not {P.HDC, P.AHDC} <= flags
            assert not {P.HSO, P.AHSO} <= flags


# =============================================================================
# Distance
# =============================================================================


class TestMinDistance:
    """Tests for minimum distance by enumeration."""

    def test_values(self, diagonal_code, full2):
        assert min_distance(diagonal_code) == MinDistance(2)
        assert min_distance(full2).value == 1

    def test_zero_code(self, zero2):
        assert min_distance(zero2) == MinDistance(3, zero_code=True)

    def test_repetition_code(self):
        """The length-5 repetition code over GF(9) has distance 5 and is MDS."""
        c = make_code(GF9, [[1, 1, 1, 1, 1]], 5)
        assert min_distance(c).value == 5
        assert is_mds(c)

    def test_not_mds(self):
        assert not is_mds(make_code(GF4, [[1, 1, 0]], 3))

    def test_cap(self):
        with pytest.raises(EnumerationCapError) as exc_info:
            min_distance(full_space(GF4, 3), cap=10)
        assert exc_info.value.required == 64
        assert exc_info.value.cap == 10


# =============================================================================
# Enumeration
# =============================================================================


class TestEnumeration:
    """Tests for exhaustive and random code generation."""

    def test_all_codes_counts(self):
        """Subspaces of GF(4)^2: 1 + 5 + 1; of GF(4)^3: 1 + 21 + 21 + 1."""
        assert len(list(all_codes(GF4, 2))) == 7
        codes = list(all_codes(GF4, 3))
        assert len(codes) == 44
        assert len(set(codes)) == 44

    def test_all_codes_by_dimension(self):
        assert len(list(all_codes(GF9, 2, dimension=1))) == 10

    def test_bad_dimension(self):
        with pytest.raises(OutOfRangeError):
            list(all_codes(GF4, 2, dimension=3))

    def test_random_code_is_seeded(self):
        a = random_code(GF9, 4, 2, np.random.default_rng(7))
        b = random_code(GF9, 4, 2, np.random.default_rng(7))
        assert a == b
        assert a.dimension == 2


# =============================================================================
# Duality and distance invariants
# =============================================================================


class TestDualityInvariants:
    """Identities checked over every pair of codes in GF(4)^3."""

    def test_orthogonality_is_symmetric(self):
        """C1 ⊆ C2^⊥H exactly when C2 ⊆ C1^⊥H."""
        codes = list(all_codes(GF4, 3))
        duals = [hermitian_dual(c) for c in codes]
        for c1, d1 in zip(codes, duals):
            for c2, d2 in zip(codes, duals):
                assert contains(d2, c1) == contains(d1, c2), (c1, c2)


class TestSingletonBound:
    """d ≤ n - t + 1 on random codes."""

    @settings(derandomize=True, deadline=None, max_examples=40)
    @given(st.integers(0, 2**31 - 1), st.integers(1, 5), st.sampled_from([GF4, GF9]))
    def test_singleton(self, seed, n, spec):
        rng = np.random.default_rng(seed)
        t = int(rng.integers(1, n + 1))
        c = random_code(spec, n, t, rng)
        assert min_distance(c).value <= n - c.dimension + 1

    def test_mds_meets_singleton(self, diagonal_code):
        assert min_distance(diagonal_code).value == 2 - 1 + 1
        assert is_mds(diagonal_code)
