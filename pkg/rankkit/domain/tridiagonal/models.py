"""
Domain models for nonnegative ranks of tridiagonal matrices.

A tridiagonal matrix splits into diagonal blocks with nonzero sub- and
superdiagonals; consecutive blocks are joined by at most one nonzero entry,
either just above the diagonal (upper coupler) or just below it (lower
coupler).
"""

from dataclasses import dataclass
from enum import Enum

from rankkit.domain.matrices.models import ZERO, Rational
from rankkit.domain.semirings.models import RankOneSummand


class CouplerKind(str, Enum):
    UPPER = "upper"
    LOWER = "lower"
    NONE = "none"


@dataclass(frozen=True)
class Coupler:
    """
    The entry joining two consecutive blocks.

    UPPER is the bottom-left unit of the block above the diagonal (entry
    (last row of block i, first column of block i+1)); LOWER is the top-right
    unit of the block below it.
    """

    kind: CouplerKind = CouplerKind.NONE
    value: Rational = ZERO


@dataclass(frozen=True)
class TridiagonalBlock:
    """One diagonal block kept as its three bands (0-based, block-local)."""

    diag: tuple[Rational, ...]
    upper: tuple[Rational, ...]
    lower: tuple[Rational, ...]

    @property
    def size(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[TridiagonalBlock, ...]
    couplers: tuple[Coupler, ...]
    offsets: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(block.size for block in self.blocks)


@dataclass(frozen=True)
class FullRankOutcome:
    """
    Nonnegative rank of one block: its size or one less.

    ``chain`` is a decomposition of the block into exactly ``value`` rank-one
    pieces, with block-local 1-based indices.
    """

    size: int
    value: int
    chain: tuple[RankOneSummand, ...]

    @property
    def is_full(self) -> bool:
        return self.value == self.size


@dataclass(frozen=True)
class TraceSegment:
    """
    One step of the block recursion.

    A full segment consumes a single block; a deficient one consumes blocks
    ``first_block`` .. ``last_block`` joined by upper couplers (in the
    segment's orientation).
    """

    first_block: int
    last_block: int
    transposed: bool
    outcome: FullRankOutcome
    rank: int


@dataclass(frozen=True)
class NnrTrace:
    decomposition: BlockDecomposition
    segments: tuple[TraceSegment, ...]

    @property
    def rank(self) -> int:
        return sum(segment.rank for segment in self.segments)
