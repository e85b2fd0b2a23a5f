"""Unit tests for the exhaustive tridiagonal nonnegative-rank oracle."""

from fractions import Fraction

import pytest

from rankkit.domain.cover.exceptions import TooLargeError
from rankkit.domain.tridiagonal.exceptions import NotTridiagonalError
from rankkit.service_layer.tridiagonal.oracle import Interval, _second_factor, pattern_oracle_nnr
from rankkit.shared.exceptions import InvariantViolationError
from tests.helpers import band, identity


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[1, 1], [1, 1]], 1),
        ([[1, 2], [1, 1]], 2),
        ([[1, 1, 0], [1, 1, 1], [0, 0, 1]], 2),
        ([[1, 1, 0, 0], [1, 1, 1, 0], [0, 0, 1, 1], [0, 0, 1, 1]], 3),
        ([[1, 1, 0], [1, 1, 1], [0, 1, 1]], 3),
        ([[1, 1, 0], [1, 2, 1], [0, 1, 1]], 2),
        ([[0, 1, 0], [1, 0, 1], [0, 1, 0]], 2),
    ],
)
def test_oracle_values(rows, expected) -> None:
    """
    GIVEN a small tridiagonal matrix
    WHEN the pattern oracle runs
    THEN it returns the known nonnegative rank.
    """
    assert pattern_oracle_nnr(band(rows, k=1)) == expected


def test_identity() -> None:
    assert pattern_oracle_nnr(identity(3)) == 3


def test_zero_matrix(zero_3) -> None:
    assert pattern_oracle_nnr(zero_3) == 0


def test_size_guard() -> None:
    with pytest.raises(TooLargeError):
        pattern_oracle_nnr(identity(9))
    assert pattern_oracle_nnr(identity(9), max_dimension=9) == 9


def test_non_tridiagonal_is_rejected() -> None:
    with pytest.raises(NotTridiagonalError):
        pattern_oracle_nnr(band([[1, 0, 1], [0, 1, 0], [0, 0, 1]], k=2))


class TestInterval:
    def test_empty_and_degenerate(self):
        assert Interval(Fraction(1), Fraction(1)).contains(Fraction(1))
        assert Interval(Fraction(1), Fraction(1), lo_open=True).is_empty
        assert Interval(Fraction(2), Fraction(1)).is_empty
        assert not Interval(Fraction(5), None).is_empty

    def test_open_ends(self):
        """
        GIVEN (0, 2]
        WHEN membership is tested
        THEN 0 is excluded, 2 included, and unbounded intervals contain large values.
        """
        interval = Interval(Fraction(0), Fraction(2), lo_open=True)
        assert not interval.contains(Fraction(0))
        assert interval.contains(Fraction(2))
        assert Interval(Fraction(1), None).contains(Fraction(10**6))

    def test_reaches_down_to(self):
        assert Interval(Fraction(1), None).reaches_down_to(Fraction(1))
        assert not Interval(Fraction(1), None, lo_open=True).reaches_down_to(Fraction(1))
        assert not Interval(Fraction(2), Fraction(3)).reaches_down_to(Fraction(1))

    def test_unbounded_first_factor_is_rejected(self):
        with pytest.raises(InvariantViolationError):
            _second_factor(Interval(Fraction(1), None), Fraction(2), exact=True)
