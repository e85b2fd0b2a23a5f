"""Arithmetic operation counting used as runtime evidence in run statistics."""

from dataclasses import dataclass


@dataclass
class OperationCounter:
    """
    Mutable tally of exact arithmetic operations and comparisons.

    One counter is owned by a single computation; it is never shared between
    threads.
    """

    arithmetic_ops: int = 0
    dp_states: int = 0
    sets_enumerated: int = 0

    def tick(self, count: int = 1) -> None:
        self.arithmetic_ops += count
