# Exact matrix services: construction, support, surgery and conventional rank

import logging
import math
import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

from rankkit.domain.matrices.exceptions import (
    DuplicateEntryError,
    InvalidRationalError,
    NegativeEntryError,
    OutOfBandError,
    OutOfRangeError,
)
from rankkit.domain.matrices.models import (
    ONE,
    BandMatrix,
    DenseMatrix,
    Position,
    Rational,
    Support,
)
from rankkit.shared.exceptions import ValidationError

logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")

Triplet = tuple[int, int, Rational]


def parse_rational(text: str) -> Rational:
    """Parse an integer, ``p/q`` or decimal literal exactly (decimals become p/10^d)."""
    literal = text.strip()
    if not _RATIONAL_RE.match(literal):
        raise InvalidRationalError(f"Not an exact rational literal: {text!r}")
    try:
        return Fraction(literal)
    except ZeroDivisionError as exc:
        raise InvalidRationalError(f"Zero denominator in {text!r}") from exc


def format_rational(value: Rational) -> str:
    return str(value)


def from_triplets(n: int, k: int, triplets: Iterable[Triplet]) -> BandMatrix:
    """
    Build a BandMatrix from 1-based (i, j, value) triplets.

    Zero values are accepted and dropped; every strictly positive value is
    stored. Positions are checked for range and duplicates before the band
    constraint, which only applies to nonzero values.
    """
    if n < 0 or k < 0:
        raise ValidationError(f"Dimension and half-width must be nonnegative, got n={n}, k={k}")

    seen: set[Position] = set()
    stored: dict[Position, Rational] = {}
    for i, j, raw in triplets:
        value = Fraction(raw)
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRangeError(f"Position ({i}, {j}) outside 1..{n}")
        if (i, j) in seen:
            raise DuplicateEntryError(f"Position ({i}, {j}) given more than once")
        seen.add((i, j))
        if value < 0:
            raise NegativeEntryError(f"Entry ({i}, {j}) = {value} is negative")
        if value == 0:
            continue
        if abs(i - j) > k:
            raise OutOfBandError(f"Entry ({i}, {j}) lies outside the band |i-j| <= {k}")
        stored[(i, j)] = value

    return BandMatrix(n=n, k=k, items=tuple(sorted(stored.items())))


def support(matrix: BandMatrix) -> Support:
    """Row-major list of the nonzero positions."""
    return tuple(matrix.positions())


def transpose(matrix: BandMatrix) -> BandMatrix:
    items = sorted(((j, i), value) for (i, j), value in matrix.items)
    return BandMatrix(n=matrix.n, k=matrix.k, items=tuple(items))


def to_dense(matrix: BandMatrix) -> DenseMatrix:
    values = tuple(
        tuple(matrix.get(i, j) for j in range(1, matrix.n + 1)) for i in range(1, matrix.n + 1)
    )
    return DenseMatrix(rows=matrix.n, cols=matrix.n, values=values)


def from_dense(matrix: DenseMatrix, k: int | None = None) -> BandMatrix:
    """
    Convert a square DenseMatrix into a BandMatrix.

    When ``k`` is omitted the smallest half-width holding every nonzero entry
    is used.
    """
    if matrix.rows != matrix.cols:
        raise ValidationError(f"BandMatrix must be square, got {matrix.rows}x{matrix.cols}")
    positions = matrix.nonzero_positions()
    if k is None:
        k = max((abs(i - j) for i, j in positions), default=0)
    return from_triplets(matrix.rows, k, ((i, j, matrix.get(i, j)) for i, j in positions))


def support_pattern(matrix: BandMatrix) -> BandMatrix:
    """The 0/1 matrix with the same support (the Boolean view of ``matrix``)."""
    return BandMatrix(n=matrix.n, k=matrix.k, items=tuple((p, ONE) for p in matrix.positions()))


def diagonal_scale(
    matrix: BandMatrix, row_factors: Sequence[Rational], col_factors: Sequence[Rational]
) -> BandMatrix:
    """Return D1·M·D2 for positive diagonal D1 = diag(row_factors), D2 = diag(col_factors)."""
    if len(row_factors) != matrix.n or len(col_factors) != matrix.n:
        raise ValidationError("Scaling vectors must have length n")
    if any(f <= 0 for f in (*row_factors, *col_factors)):
        raise ValidationError("Scaling factors must be strictly positive")
    items = tuple(
        ((i, j), Fraction(row_factors[i - 1]) * value * Fraction(col_factors[j - 1]))
        for (i, j), value in matrix.items
    )
    return BandMatrix(n=matrix.n, k=matrix.k, items=items)


def delete_rows_cols(
    matrix: DenseMatrix, rows: Iterable[int], cols: Iterable[int]
) -> DenseMatrix:
    """Complementary submatrix after deleting 1-based ``rows`` and ``cols``; order is preserved."""
    drop_rows, drop_cols = set(rows), set(cols)
    for i in drop_rows:
        if not 1 <= i <= matrix.rows:
            raise OutOfRangeError(f"Row {i} outside 1..{matrix.rows}")
    for j in drop_cols:
        if not 1 <= j <= matrix.cols:
            raise OutOfRangeError(f"Column {j} outside 1..{matrix.cols}")

    keep_cols = [j for j in range(matrix.cols) if j + 1 not in drop_cols]
    values = tuple(
        tuple(row[j] for j in keep_cols)
        for i, row in enumerate(matrix.values)
        if i + 1 not in drop_rows
    )
    return DenseMatrix(rows=len(values), cols=len(keep_cols), values=values)


def rational_rank(matrix: DenseMatrix) -> int:
    """
    Conventional rank over the rationals.

    Each row is first cleared of denominators (row scaling keeps the rank), then
    fraction-free Bareiss elimination runs on integers so that every
    intermediate division is exact.
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return 0

    grid: list[list[int]] = []
    for row in matrix.values:
        scale = math.lcm(*(value.denominator for value in row))
        grid.append([int(value * scale) for value in row])

    rank = 0
    previous_pivot = 1
    n_rows, n_cols = len(grid), len(grid[0])
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if grid[r][col] != 0), None)
        if pivot_row is None:
            continue
        grid[rank], grid[pivot_row] = grid[pivot_row], grid[rank]
        pivot = grid[rank][col]
        for r in range(rank + 1, n_rows):
            factor = grid[r][col]
            for c in range(col + 1, n_cols):
                grid[r][c] = (pivot * grid[r][c] - factor * grid[rank][c]) // previous_pivot
            grid[r][col] = 0
        previous_pivot = pivot
        rank += 1
        if rank == n_rows:
            break

    logger.debug("Rational rank of %dx%d matrix: %d", matrix.rows, matrix.cols, rank)
    return rank
