"""Unit tests for exact matrix construction, surgery and conventional rank."""

from fractions import Fraction

import pytest

from rankkit.domain.matrices.exceptions import (
    DuplicateEntryError,
    InvalidRationalError,
    NegativeEntryError,
    OutOfBandError,
    OutOfRangeError,
)
from rankkit.domain.matrices.models import BandMatrix, dense, zero_dense
from rankkit.service_layer.matrices.services import (
    delete_rows_cols,
    diagonal_scale,
    from_dense,
    from_triplets,
    parse_rational,
    rational_rank,
    support,
    support_pattern,
    to_dense,
    transpose,
)
from rankkit.shared.exceptions import ValidationError
from tests.helpers import band


class TestParseRational:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("3", Fraction(3)),
            ("1/2", Fraction(1, 2)),
            ("0.25", Fraction(1, 4)),
            ("-1.5", Fraction(-3, 2)),
            (" 4/6 ", Fraction(2, 3)),
            ("5.", Fraction(5)),
            (".5", Fraction(1, 2)),
        ],
    )
    def test_parses_exact_literals(self, text, expected):
        """
        GIVEN an integer, p/q or decimal literal
        WHEN parsed
        THEN the value is the exact rational.
        """
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["abc", "1e3", "1/2/3", "", "0x10", "1/0"])
    def test_rejects_other_literals(self, text):
        """
        GIVEN text that is not an exact rational literal
        WHEN parsed
        THEN InvalidRationalError is raised.
        """
        with pytest.raises(InvalidRationalError):
            parse_rational(text)


class TestFromTriplets:
    def test_builds_all_ones(self):
        """
        GIVEN the four positions of a 2×2 matrix with value 1
        WHEN built with k=1
        THEN every entry reads 1.
        """
        matrix = from_triplets(2, 1, [(1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)])
        assert matrix == band([[1, 1], [1, 1]], k=1)
        assert all(matrix.get(i, j) == 1 for i in (1, 2) for j in (1, 2))

    def test_out_of_band_entry_is_rejected(self):
        """
        GIVEN a nonzero entry at (1, 3) with k=1
        WHEN built
        THEN OutOfBandError is raised.
        """
        with pytest.raises(OutOfBandError):
            from_triplets(3, 1, [(1, 3, 5)])

    def test_empty_input_gives_zero_matrix(self):
        """
        GIVEN no triplets
        WHEN built
        THEN the matrix is zero with empty support.
        """
        matrix = from_triplets(3, 1, [])
        assert matrix.is_zero
        assert support(matrix) == ()

    def test_zero_values_are_dropped_even_outside_band(self):
        """
        GIVEN explicit zeros, one of them outside the band
        WHEN built
        THEN nothing is stored and no band error is raised.
        """
        matrix = from_triplets(3, 0, [(1, 1, 0), (1, 3, 0), (2, 2, 2)])
        assert support(matrix) == ((2, 2),)

    def test_duplicate_position_is_rejected(self):
        """
        GIVEN the same position twice
        WHEN built
        THEN DuplicateEntryError is raised before the sign is checked.
        """
        with pytest.raises(DuplicateEntryError):
            from_triplets(2, 1, [(1, 1, 1), (1, 1, -1)])

    def test_position_outside_matrix_is_rejected(self):
        """
        GIVEN a position beyond n
        WHEN built
        THEN OutOfRangeError is raised.
        """
        with pytest.raises(OutOfRangeError):
            from_triplets(2, 1, [(3, 3, 1)])

    def test_negative_value_is_rejected(self):
        """
        GIVEN a negative entry
        WHEN built
        THEN NegativeEntryError is raised.
        """
        with pytest.raises(NegativeEntryError):
            from_triplets(2, 1, [(1, 2, "-1/2")])


class TestSupportAndTranspose:
    def test_support_is_row_major(self, tridiagonal_3):
        """
        GIVEN the tridiagonal example
        WHEN its support is read
        THEN positions come in row-major order.
        """
        assert support(tridiagonal_3) == ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 3))

    def test_support_of_all_ones(self, all_ones_2):
        assert support(all_ones_2) == ((1, 1), (1, 2), (2, 1), (2, 2))

    def test_transpose_moves_entries(self):
        """
        GIVEN [[0,1],[0,0]]
        WHEN transposed
        THEN the entry moves below the diagonal.
        """
        assert transpose(band([[0, 1], [0, 0]], k=1)) == band([[0, 0], [1, 0]], k=1)

    def test_transpose_is_an_involution(self, tridiagonal_3, zero_3):
        assert transpose(transpose(tridiagonal_3)) == tridiagonal_3
        assert transpose(zero_3) == zero_3


class TestDenseConversions:
    def test_to_dense_and_back(self, tridiagonal_3):
        """
        GIVEN a band matrix
        WHEN converted to dense and back with the same k
        THEN the matrix is unchanged.
        """
        assert from_dense(to_dense(tridiagonal_3), 1) == tridiagonal_3

    def test_from_dense_infers_smallest_half_width(self):
        """
        GIVEN a dense matrix whose farthest entry is two off the diagonal
        WHEN converted without k
        THEN k is 2.
        """
        matrix = from_dense(dense([[1, 0, 1], [0, 1, 0], [0, 0, 1]]))
        assert matrix.k == 2

    def test_from_dense_rejects_rectangular(self):
        with pytest.raises(ValidationError):
            from_dense(dense([[1, 2, 3]]))

    def test_support_pattern_is_zero_one(self):
        """
        GIVEN a matrix with rational entries
        WHEN its support pattern is taken
        THEN every stored entry becomes 1 on the same positions.
        """
        matrix = band([[2, "1/3"], [0, 5]], k=1)
        pattern = support_pattern(matrix)
        assert support(pattern) == support(matrix)
        assert set(pattern.entries.values()) == {1}

    def test_diagonal_scale(self):
        """
        GIVEN positive row and column factors
        WHEN scaling
        THEN entry (i, j) is multiplied by r_i·c_j.
        """
        matrix = band([[1, 2], [3, 4]], k=1)
        scaled = diagonal_scale(matrix, [Fraction(2), Fraction(1, 2)], [Fraction(3), Fraction(1)])
        assert to_dense(scaled) == dense([[6, 4], [Fraction(9, 2), 2]])

    def test_diagonal_scale_rejects_nonpositive_factors(self):
        with pytest.raises(ValidationError):
            diagonal_scale(band([[1]], k=0), [Fraction(0)], [Fraction(1)])


class TestDeleteRowsCols:
    def test_deletes_row_and_column(self):
        """
        GIVEN [[1,1],[0,1]]
        WHEN row 1 and column 1 are deleted
        THEN [[1]] remains.
        """
        assert delete_rows_cols(dense([[1, 1], [0, 1]]), {1}, {1}) == dense([[1]])

    def test_deleting_nothing_is_identity(self):
        matrix = dense([[1, 2], [3, 4]])
        assert delete_rows_cols(matrix, set(), set()) == matrix

    def test_deleting_all_rows_leaves_empty_matrix(self):
        """
        GIVEN a 2×2 matrix
        WHEN both rows are deleted
        THEN a 0×2 matrix of rank 0 remains.
        """
        result = delete_rows_cols(dense([[1, 2], [3, 4]]), {1, 2}, set())
        assert (result.rows, result.cols) == (0, 2)
        assert rational_rank(result) == 0

    def test_out_of_range_index_is_rejected(self):
        with pytest.raises(OutOfRangeError):
            delete_rows_cols(dense([[1]]), {2}, set())


class TestRationalRank:
    @pytest.mark.parametrize(
        ("rows", "expected"),
        [
            ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
            ([[1, 1], [1, 1]], 1),
            ([[1, 1, 0], [1, 1, 1], [0, 0, 1]], 2),
            ([[2, 1], [1, 2]], 2),
            ([["1/2", "1/3"], ["3/2", 1]], 1),
            ([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 2),
        ],
    )
    def test_rank(self, rows, expected):
        """
        GIVEN a dense rational matrix
        WHEN its conventional rank is computed
        THEN it matches the known value.
        """
        assert rational_rank(dense(rows)) == expected

    def test_zero_matrix_has_rank_zero(self):
        assert rational_rank(zero_dense(3, 3)) == 0

    def test_band_matrix_entries_are_positive_only(self):
        """
        GIVEN a BandMatrix built directly
        WHEN an absent position is read
        THEN it reads as exact zero.
        """
        matrix = BandMatrix(n=2, k=1, items=(((1, 1), Fraction(1)),))
        assert matrix.get(2, 2) == 0
