"""
Domain models for the admissible-set cover problem.

The cover problem is a hitting set on a bipartite graph: admissible sets on
one side, support entries on the other, an edge when the entry lies in the
set. Vertices are laid out on a line by their first appearance in the
sequence u_1, (sets first containing u_1), u_2, ...; every edge then has
bounded length for a band matrix.
"""

from dataclasses import dataclass

from rankkit.domain.admissible.models import AdmissibleSet
from rankkit.domain.matrices.models import Support


@dataclass(frozen=True)
class CoverInstance:
    """
    Incidence of admissible sets against support entries plus the linear layout.

    Sets are indexed in layout order. ``element_layout[e]`` and
    ``set_layout[s]`` are the 1-based layout positions of element e and set s.
    """

    sets: tuple[AdmissibleSet, ...]
    elements: Support
    incidence: tuple[tuple[int, ...], ...]
    set_members: tuple[tuple[int, ...], ...]
    element_layout: tuple[int, ...]
    set_layout: tuple[int, ...]
    spread_bound: int

    @property
    def is_empty(self) -> bool:
        return not self.elements


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.chosen)
