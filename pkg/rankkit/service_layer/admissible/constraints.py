"""
Multiplicative difference constraints.

Each constraint reads ``x[target] < bound * x[source]`` over positive unknowns.
Taking logarithms turns these into ordinary difference constraints, so
Bellman–Ford decides them; here the relaxation is done multiplicatively so the
arithmetic stays exact.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from rankkit.domain.matrices.models import ONE, Rational
from rankkit.shared.counters import OperationCounter
from rankkit.shared.exceptions import InvariantViolationError

logger = logging.getLogger(__name__)

MAX_MARGIN_ROUNDS = 512


@dataclass(frozen=True)
class RatioConstraint:
    source: int
    target: int
    bound: Rational


def strictly_feasible(
    size: int, constraints: Sequence[RatioConstraint], counter: OperationCounter | None = None
) -> bool:
    """
    Decide whether all strict constraints hold for some positive vector.

    Path weights live in the ordered group (ℚ>0, ×) × (ℤ, +) compared
    lexicographically; each strict edge weighs (bound, −1). A cycle is
    negative exactly when its bound product is < 1, or equal to 1, which are
    precisely the infeasible cycles of the strict system.
    """
    if not constraints:
        return True

    dist: list[tuple[Rational, int]] = [(ONE, 0)] * size
    for _ in range(size + 1):
        changed = False
        for c in constraints:
            product, length = dist[c.source]
            candidate = (product * c.bound, length - 1)
            if counter is not None:
                counter.tick(2)
            if candidate < dist[c.target]:
                dist[c.target] = candidate
                changed = True
        if not changed:
            return True
    return False


def _relax_non_strict(
    size: int,
    constraints: Sequence[RatioConstraint],
    theta: Rational,
    counter: OperationCounter | None,
) -> list[Rational] | None:
    dist = [ONE] * size
    for _ in range(size + 1):
        changed = False
        for c in constraints:
            candidate = dist[c.source] * c.bound * theta
            if counter is not None:
                counter.tick(3)
            if candidate < dist[c.target]:
                dist[c.target] = candidate
                changed = True
        if not changed:
            return dist
    return None


def solve_strict(
    size: int, constraints: Sequence[RatioConstraint], counter: OperationCounter | None = None
) -> list[Rational]:
    """
    Positive solution of a strictly feasible system.

    Every bound is tightened by a common factor θ < 1 and the non-strict system
    is solved by shortest products; θ starts at 1/2 and moves halfway to 1
    until the tightened system is feasible.
    """
    theta = Fraction(1, 2)
    for _ in range(MAX_MARGIN_ROUNDS):
        solution = _relax_non_strict(size, constraints, theta, counter)
        if solution is not None:
            return solution
        theta = (theta + 1) / 2
    raise InvariantViolationError("No strict margin found for a feasible constraint system")
