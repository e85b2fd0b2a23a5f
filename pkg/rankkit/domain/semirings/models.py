"""
Domain models for semirings and rank certificates.

The tropical semiring is used in its multiplicative form (ℚ≥0, max, ·) so all
arithmetic stays rational; Boolean matrices are {0,1}-valued rationals.
"""

from dataclasses import dataclass, field
from enum import Enum

from rankkit.domain.matrices.models import Rational


class SemiringKind(str, Enum):
    """The four supported semirings, tagged as on the command line."""

    BOOLEAN = "boolean"
    FUZZY = "fuzzy"
    TROPICAL = "tropical"
    NONNEGATIVE = "nonneg"

    @property
    def is_max_based(self) -> bool:
        return self is not SemiringKind.NONNEGATIVE


@dataclass(frozen=True)
class RankOneSummand:
    """
    Rank-one matrix Q with Q_ij = u_i ⊙ v_j on rows × cols and zero elsewhere.

    ``u`` is indexed like ``rows`` and ``v`` like ``cols``; indices are 1-based
    and strictly increasing.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    u: tuple[Rational, ...]
    v: tuple[Rational, ...]

    def transposed(self) -> "RankOneSummand":
        return RankOneSummand(rows=self.cols, cols=self.rows, u=self.v, v=self.u)

    def shifted(self, offset: int) -> "RankOneSummand":
        return RankOneSummand(
            rows=tuple(i + offset for i in self.rows),
            cols=tuple(j + offset for j in self.cols),
            u=self.u,
            v=self.v,
        )


@dataclass(frozen=True)
class RankCertificate:
    """Explicit rank-one summands whose semiring sum reconstructs a matrix."""

    kind: SemiringKind
    summands: tuple[RankOneSummand, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.summands)


@dataclass
class RunStats:
    sets_enumerated: int = 0
    dp_states: int = 0
    arithmetic_ops: int = 0
    wall_ms: float = 0.0


@dataclass
class RankResult:
    """A computed factorization rank with its certificate and run statistics."""

    kind: SemiringKind
    rank: int
    certificate: RankCertificate
    stats: RunStats = field(default_factory=RunStats)
