"""
Domain models for admissible sets.

An admissible set is a subset of a matrix's support that is exactly the
equality pattern of some rank-one matrix dominated by the matrix.
"""

from dataclasses import dataclass
from functools import cached_property

from rankkit.domain.matrices.models import Position, Support
from rankkit.domain.semirings.models import RankOneSummand, SemiringKind


@dataclass(frozen=True)
class AdmissibleSet:
    """
    A t-, f- or Boolean-admissible subset ``alpha`` of the support.

    ``alpha`` is stored sorted row-major. The witness is the rank-one matrix
    realizing it, expressed as a summand over rows(alpha) × cols(alpha).
    """

    alpha: Support
    kind: SemiringKind
    witness: RankOneSummand | None = None

    @cached_property
    def rows(self) -> tuple[int, ...]:
        return tuple(sorted({i for i, _ in self.alpha}))

    @cached_property
    def cols(self) -> tuple[int, ...]:
        return tuple(sorted({j for _, j in self.alpha}))

    @cached_property
    def members(self) -> frozenset[Position]:
        return frozenset(self.alpha)

    @property
    def row_spread(self) -> int:
        return self.rows[-1] - self.rows[0]

    @property
    def col_spread(self) -> int:
        return self.cols[-1] - self.cols[0]

    def __len__(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class Window:
    """
    The (4k+1)×(4k+1) neighbourhood of an anchor position.

    Every admissible set containing the anchor lies inside it.
    """

    anchor: Position
    row_range: tuple[int, int]
    col_range: tuple[int, int]
