"""Unit tests for strict multiplicative difference constraints."""

from fractions import Fraction

import pytest

from rankkit.service_layer.admissible.constraints import (
    RatioConstraint,
    solve_strict,
    strictly_feasible,
)
from rankkit.shared.counters import OperationCounter


def _pair(forward: Fraction, backward: Fraction) -> list[RatioConstraint]:
    """x1 < forward·x0 and x0 < backward·x1."""
    return [
        RatioConstraint(source=0, target=1, bound=forward),
        RatioConstraint(source=1, target=0, bound=backward),
    ]


def _holds(solution: list[Fraction], constraints: list[RatioConstraint]) -> bool:
    return all(solution[c.target] < c.bound * solution[c.source] for c in constraints)


def test_no_constraints_are_feasible() -> None:
    assert strictly_feasible(3, [])
    assert solve_strict(3, []) == [1, 1, 1]


@pytest.mark.parametrize(
    ("forward", "backward", "expected"),
    [
        (Fraction(2), Fraction(2), True),
        (Fraction(1, 2), Fraction(1, 2), False),
        (Fraction(1), Fraction(1), False),
        (Fraction(2), Fraction(1, 2), False),
        (Fraction(3, 2), Fraction(3, 4), True),
    ],
)
def test_two_cycle_feasibility(forward, backward, expected) -> None:
    """
    GIVEN a two-variable cycle of strict ratio constraints
    WHEN feasibility is decided
    THEN it is feasible exactly when the bound product exceeds 1.
    """
    assert strictly_feasible(2, _pair(forward, backward)) is expected


def test_solution_satisfies_every_strict_constraint() -> None:
    """
    GIVEN a feasible cycle whose bound product is barely above 1
    WHEN solved
    THEN the returned vector is positive and satisfies each constraint strictly.
    """
    constraints = _pair(Fraction(3, 2), Fraction(3, 4))
    solution = solve_strict(2, constraints)
    assert all(x > 0 for x in solution)
    assert _holds(solution, constraints)


def test_longer_cycle_with_chord() -> None:
    """
    GIVEN a three-variable system with a cycle and a chord
    WHEN checked and solved
    THEN the strict solution respects all three constraints.
    """
    constraints = [
        RatioConstraint(source=0, target=1, bound=Fraction(2)),
        RatioConstraint(source=1, target=2, bound=Fraction(1, 3)),
        RatioConstraint(source=2, target=0, bound=Fraction(2)),
        RatioConstraint(source=0, target=2, bound=Fraction(1)),
    ]
    assert strictly_feasible(3, constraints)
    assert _holds(solve_strict(3, constraints), constraints)


def test_counter_records_relaxations() -> None:
    counter = OperationCounter()
    strictly_feasible(2, _pair(Fraction(2), Fraction(2)), counter)
    assert counter.arithmetic_ops > 0
