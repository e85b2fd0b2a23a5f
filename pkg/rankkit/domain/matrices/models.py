"""
Domain models for exact matrices.

Pure value objects: exact rational entries, 1-based positions, no I/O. Matrices
are immutable once built; the services in ``rankkit.service_layer.matrices``
are the only place that validates and constructs them from raw input.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Rational = Fraction
Position = tuple[int, int]
Support = tuple[Position, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class BandMatrix:
    """
    Square n×n matrix whose nonzero entries lie within |i−j| ≤ k.

    Only strictly positive entries are stored, keyed by 1-based position and
    kept in row-major order; an absent position reads as exact zero.
    """

    n: int
    k: int
    items: tuple[tuple[Position, Rational], ...] = ()

    @cached_property
    def entries(self) -> dict[Position, Rational]:
        return dict(self.items)

    def get(self, i: int, j: int) -> Rational:
        return self.entries.get((i, j), ZERO)

    def positions(self) -> Iterator[Position]:
        for position, _ in self.items:
            yield position

    @property
    def is_zero(self) -> bool:
        return not self.items


@dataclass(frozen=True)
class DenseMatrix:
    """Rectangular matrix of exact rationals stored row-major."""

    rows: int
    cols: int
    values: tuple[tuple[Rational, ...], ...] = field(default=())

    def get(self, i: int, j: int) -> Rational:
        """Entry at 1-based position (i, j)."""
        return self.values[i - 1][j - 1]

    def nonzero_positions(self) -> Support:
        return tuple(
            (i + 1, j + 1)
            for i, r in enumerate(self.values)
            for j, value in enumerate(r)
            if value != 0
        )


def dense(rows: list[list[int | str | Rational]] | tuple[tuple[Rational, ...], ...]) -> DenseMatrix:
    """Build a DenseMatrix from nested lists of integers, fractions or ``"p/q"`` strings."""
    values = tuple(tuple(Fraction(v) for v in r) for r in rows)
    cols = len(values[0]) if values else 0
    return DenseMatrix(rows=len(values), cols=cols, values=values)


def zero_dense(rows: int, cols: int) -> DenseMatrix:
    return DenseMatrix(rows=rows, cols=cols, values=tuple((ZERO,) * cols for _ in range(rows)))
