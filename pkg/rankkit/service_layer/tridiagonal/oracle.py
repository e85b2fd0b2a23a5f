"""
Exhaustive nonnegative rank of small tridiagonal matrices.

A rank-one summand of a tridiagonal matrix is supported on part of one row,
part of one column, or a full 2×2 block on two consecutive indices. Row pieces
on the same row merge into one (likewise columns), and two block pieces on the
same block are never better than two rows. So the rank is the minimum, over a
choice of block pieces, of their count plus the fewest rows and columns
covering what they leave behind.

Block pieces only interact through the diagonal entries they share, so the
feasible values a piece leaves for the next diagonal form an interval that is
carried left to right with exact endpoints.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cache

from rankkit.config.settings import get_settings
from rankkit.domain.cover.exceptions import TooLargeError
from rankkit.domain.matrices.models import ZERO, BandMatrix, Rational
from rankkit.domain.semirings.models import SemiringKind
from rankkit.service_layer.semirings.services import check_carrier
from rankkit.service_layer.tridiagonal.services import tridiagonal_arrays
from rankkit.shared.exceptions import InvariantViolationError


class PieceKind(str, Enum):
    """Which off-diagonal entries of its block a 2×2 piece matches exactly."""

    NEITHER = "neither"
    UPPER = "upper"
    LOWER = "lower"
    BOTH = "both"

    @property
    def clears_upper(self) -> bool:
        return self in (PieceKind.UPPER, PieceKind.BOTH)

    @property
    def clears_lower(self) -> bool:
        return self in (PieceKind.LOWER, PieceKind.BOTH)


@dataclass(frozen=True)
class Interval:
    """Real interval with exact endpoints; ``hi`` None means unbounded above."""

    lo: Rational
    hi: Rational | None
    lo_open: bool = False
    hi_open: bool = False

    @property
    def is_empty(self) -> bool:
        if self.hi is None:
            return False
        return self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open))

    def contains(self, value: Rational) -> bool:
        above = value > self.lo or (value == self.lo and not self.lo_open)
        below = self.hi is None or value < self.hi or (value == self.hi and not self.hi_open)
        return above and below

    def reaches_down_to(self, value: Rational) -> bool:
        """Whether some member is <= ``value``."""
        return self.lo < value or (self.lo == value and not self.lo_open)


def _first_factor(diagonal: Rational, previous: Interval | None, tight: bool) -> Interval:
    """
    Values the top-left entry x of a piece can take on a diagonal entry D.

    ``previous`` holds the bottom-right values w of the piece on the block
    before; tight means D - w - x = 0, otherwise D - w - x >= 0.
    """
    if previous is None:
        if tight:
            return Interval(diagonal, diagonal)
        return Interval(ZERO, diagonal, lo_open=True)
    if not tight:
        return Interval(ZERO, diagonal - previous.lo, lo_open=True, hi_open=previous.lo_open)
    # x = D - w over the members w < D
    if previous.hi is None or previous.hi >= diagonal:
        hi, hi_open = diagonal, True
    else:
        hi, hi_open = previous.hi, previous.hi_open
    return Interval(
        diagonal - hi, diagonal - previous.lo, lo_open=hi_open, hi_open=previous.lo_open
    )


def _second_factor(first: Interval, product: Rational, exact: bool) -> Interval:
    """Values of w = p / x for x in ``first`` and p = product (exact) or p in (0, product]."""
    if first.hi is None:
        raise InvariantViolationError("First factor interval has no upper bound")
    hi = None if first.lo == 0 else product / first.lo
    if exact:
        return Interval(product / first.hi, hi, lo_open=first.hi_open, hi_open=first.lo_open)
    return Interval(ZERO, hi, lo_open=True, hi_open=first.lo_open)


def pattern_oracle_nnr(matrix: BandMatrix, max_dimension: int | None = None) -> int:
    """
    Exact nonnegative rank of a tridiagonal matrix, independent of the block recursion.

    Args:
        matrix: Nonnegative tridiagonal matrix
        max_dimension: Largest accepted n; defaults to the configured oracle limit

    Returns:
        The rank
    """
    limit = max_dimension if max_dimension is not None else get_settings().oracle_max_dimension
    if matrix.n > limit:
        raise TooLargeError(f"Pattern oracle is limited to n <= {limit}, got n={matrix.n}")
    check_carrier(matrix, SemiringKind.NONNEGATIVE)
    diag, upper, lower = tridiagonal_arrays(matrix)
    n = matrix.n

    def eligible(i: int) -> bool:
        return i < n - 1 and min(diag[i], diag[i + 1], upper[i], lower[i]) > 0

    @cache
    def best(
        i: int,
        prev_row: bool,
        prev_col: bool,
        prev_piece: PieceKind | None,
        carried: Interval | None,
    ) -> int | None:
        if i == n:
            return 0
        d = diag[i]
        found: int | None = None
        for row in (False, True):
            for col in (False, True):
                if i > 0:
                    upper_left = upper[i - 1] > 0 and not (prev_piece and prev_piece.clears_upper)
                    lower_left = lower[i - 1] > 0 and not (prev_piece and prev_piece.clears_lower)
                    if upper_left and not (prev_row or col):
                        continue
                    if lower_left and not (row or prev_col):
                        continue
                covered = row or col
                lines = int(row) + int(col)

                options: list[tuple[int, PieceKind | None, Interval | None]] = []
                if carried is None:
                    if d == 0 or covered:
                        options.append((lines, None, None))
                elif carried.contains(d) or (covered and carried.reaches_down_to(d)):
                    options.append((lines, None, None))

                if eligible(i):
                    product = upper[i] * lower[i]
                    for piece in PieceKind:
                        for tight in (True, False):
                            if not tight and not covered:
                                continue
                            first = _first_factor(d, carried, tight)
                            if first.is_empty:
                                continue
                            second = _second_factor(first, product, piece is PieceKind.BOTH)
                            options.append((lines + 1, piece, second))

                for cost, piece, after in options:
                    rest = best(i + 1, row, col, piece, after)
                    if rest is not None and (found is None or cost + rest < found):
                        found = cost + rest
        return found

    result = best(0, False, False, None, None)
    best.cache_clear()
    if result is None:
        raise InvariantViolationError("Pattern search found no decomposition")
    return result
