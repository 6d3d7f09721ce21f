"""Tests for defining-matrix discovery, bounded search and the manners table."""

import pytest
from pydantic import ValidationError

from mpcodes.codes import all_codes, full_space
from mpcodes.errors import EnumerationCapError, NotHermitianCapableError, OutOfRangeError
from mpcodes.field import FieldSpec
from mpcodes.matrix import ExactMatrix
from mpcodes.models import CodeProperty as P
from mpcodes.mp import MPCodeSpec, build
from mpcodes.oracle import brute_classify
from mpcodes.search import (
    SearchConfig,
    code_pool,
    find_monomial_matrices,
    matrix_pool,
    regenerate_table1,
    search_hdc,
)
from mpcodes.special import check_involution_structure

GF4 = FieldSpec.from_order(4)


# =============================================================================
# Monomial matrices
# =============================================================================


class TestFindMonomialMatrices:
    """Tests for scanning matrices with monomial Gram matrices."""

    def test_one_by_one(self):
        """Every non-zero scalar a has Gram a·a^q ≠ 0."""
        found = find_monomial_matrices(GF4, 1)
        assert [d.matrix.to_ints() for d in found] == [[[1]], [[2]], [[3]]]
        assert all(d.tau == "id" for d in found)

    def test_two_by_two(self, omega_matrix):
        found = find_monomial_matrices(GF4, 2)
        by_matrix = {d.matrix: d for d in found}
        assert by_matrix[omega_matrix].tau == "(1 2)"
        assert ExactMatrix.from_rows(GF4, [[1, 0], [0, 1]]) in by_matrix
        assert all(check_involution_structure(d.decomposition, "conj_transpose").ok for d in found)

    def test_lexicographic_order(self):
        found = find_monomial_matrices(GF4, 2)
        flat = [sum(d.matrix.to_ints(), []) for d in found]
        assert flat == sorted(flat)

    def test_limit(self):
        assert len(find_monomial_matrices(GF4, 2, limit=5)) == 5

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            find_monomial_matrices(GF4, 3, cap=1000)

    def test_sampled_is_seeded(self):
        a = find_monomial_matrices(GF4, 3, mode="sampled", sample_size=512, seed=3)
        b = find_monomial_matrices(GF4, 3, mode="sampled", sample_size=512, seed=3)
        assert [d.matrix for d in a] == [d.matrix for d in b]

    def test_euclidean_gram(self):
        found = find_monomial_matrices(GF4, 2, gram_kind="euclidean")
        assert all(check_involution_structure(d.decomposition, "transpose").ok for d in found)

    def test_odd_degree_field(self):
        with pytest.raises(NotHermitianCapableError):
            find_monomial_matrices(FieldSpec.from_order(8), 2)


# =============================================================================
# Search
# =============================================================================


class TestSearchConfig:
    """Tests for search configuration validation."""

    def test_explicit_needs_matrices(self):
        with pytest.raises(ValidationError):
            SearchConfig(spec=GF4, n=2, k=2, matrix_source="explicit")

    def test_matrix_shape(self):
        with pytest.raises(ValidationError):
            SearchConfig(
                spec=GF4, n=2, k=2, matrix_source="explicit",
                matrices=(ExactMatrix.from_rows(GF4, [[1]]),),
            )

    def test_k_limit(self):
        with pytest.raises(ValidationError):
            SearchConfig(spec=GF4, n=2, k=5)


class TestSearch:
    """Tests for search_hdc."""

    def test_explicit_matrix(self, omega_matrix, full2):
        config = SearchConfig(spec=GF4, n=2, k=2, matrix_source="explicit", matrices=(omega_matrix,))
        hits = search_hdc(config)
        assert hits
        assert all(P.HDC in h.flags for h in hits)
        assert all(h.verified for h in hits)
        assert any(h.constituents == (full2, full2) for h in hits)

    def test_deterministic(self, omega_matrix):
        config = SearchConfig(spec=GF4, n=2, k=2, matrix_source="explicit", matrices=(omega_matrix,))
        assert [h.to_line() for h in search_hdc(config)] == [h.to_line() for h in search_hdc(config)]

    def test_no_fixed_points_no_ahdc(self, omega_matrix):
        """tau = (1 2) over n = 2 leaves t·n - 1 odd, so AHDC cannot occur."""
        config = SearchConfig(
            spec=GF4, n=2, k=2, targets=frozenset({P.AHDC}),
            matrix_source="explicit", matrices=(omega_matrix,),
        )
        assert search_hdc(config) == []

    def test_limit(self, omega_matrix):
        config = SearchConfig(
            spec=GF4, n=2, k=2, matrix_source="explicit", matrices=(omega_matrix,), limit=2
        )
        assert len(search_hdc(config)) == 2

    def test_non_monomial_pool_matrix_skipped(self, omega_matrix):
        bad = ExactMatrix.from_rows(GF4, [[1, 1], [0, 1]])
        config = SearchConfig(spec=GF4, n=2, k=2, matrix_source="explicit", matrices=(bad, omega_matrix))
        assert [d.matrix for d in matrix_pool(config)] == [omega_matrix]

    def test_random_pool_is_seeded(self):
        config = SearchConfig(spec=GF4, n=3, k=2, code_source="random", sample_size=10, seed=5)
        assert code_pool(config) == code_pool(config)

    def test_hit_line(self, omega_matrix, full2):
        config = SearchConfig(
            spec=GF4, n=2, k=2, matrix_source="explicit", matrices=(omega_matrix,),
            code_source="explicit", codes=(full2,),
        )
        (hit,) = search_hdc(config)
        assert hit.parameters == "[4, 4, ≥1]"
        assert hit.to_line() == (
            "matrix=1,1;1,2 codes=1,0;0,1|1,0;0,1 tau=(1_2) flags=HDC,HLCD "
            "n=4 dim=4 bound=1 nsc=true verified=true"
        )

    @pytest.mark.slow
    def test_complete_against_oracle(self):
        """Exhaustive search over GF(4), n = 2, k = 2 finds exactly the oracle's HDC codes."""
        config = SearchConfig(spec=GF4, n=2, k=2, verify=False)
        found = {(h.matrix, h.constituents) for h in search_hdc(config)}

        expected = set()
        codes = list(all_codes(GF4, 2))
        for d in find_monomial_matrices(GF4, 2):
            for c1 in codes:
                for c2 in codes:
                    if P.HDC in brute_classify(build(MPCodeSpec.of(d.matrix, [c1, c2]))):
                        expected.add((d.matrix, (c1, c2)))
        assert found == expected


# =============================================================================
# Manners table
# =============================================================================


class TestRegenerateTable:
    """Tests for the manners table."""

    def test_k3(self):
        table = regenerate_table1(3)
        lines = table.splitlines()
        assert lines[0] == "Manners to derive a HDC MP code C_(A,k) for k=3"
        assert len(lines) == 7
        assert "Class 2" in lines[4]
        assert lines[4].endswith("C_1^⊥H ⊆ C_2, C_3^⊥H ⊆ C_3")

    def test_target(self):
        assert "C_1 is AHSO" in regenerate_table1(2, P.AHSO)

    @pytest.mark.parametrize("k", [1, 9])
    def test_range(self, k):
        with pytest.raises(OutOfRangeError):
            regenerate_table1(k)


def test_full_space_pool_code_is_canonical():
    """Pool codes compare as subspaces."""
    config = SearchConfig(spec=GF4, n=2, k=1, code_source="explicit", codes=(full_space(GF4, 2),) * 2)
    assert code_pool(config) == [full_space(GF4, 2)]
