"""
Admissibility oracles and enumeration of maximal admissible sets.

For a band matrix the rows (columns) of any rank-one matrix dominated by it
span at most 2k consecutive indices, so the admissible sets containing a
position all live in that position's window. Sets are enumerated window by
window, each set exactly once from the window of its row-major first position.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Collection, Iterable, Iterator, Sequence
from itertools import chain, combinations

from rankkit.domain.admissible.exceptions import (
    EmptySubsetError,
    NotInSupportError,
    UnsupportedKindError,
)
from rankkit.domain.admissible.models import AdmissibleSet, Window
from rankkit.domain.matrices.models import ONE, BandMatrix, Position, Rational, Support
from rankkit.domain.semirings.models import RankOneSummand, SemiringKind
from rankkit.service_layer.admissible.constraints import (
    RatioConstraint,
    solve_strict,
    strictly_feasible,
)
from rankkit.service_layer.semirings.services import check_carrier
from rankkit.shared.counters import OperationCounter
from rankkit.shared.exceptions import InvariantViolationError

logger = logging.getLogger(__name__)

Oracle = Callable[
    [BandMatrix, Collection[Position], OperationCounter | None], RankOneSummand | None
]


def _powerset(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def _prepare(
    matrix: BandMatrix, alpha: Iterable[Position]
) -> tuple[frozenset[Position], tuple[int, ...], tuple[int, ...]]:
    members = frozenset(alpha)
    if not members:
        raise EmptySubsetError("Admissibility is undefined for the empty subset")
    for position in members:
        if position not in matrix.entries:
            raise NotInSupportError(f"Position {position} is not in the support")
    rows = tuple(sorted({i for i, _ in members}))
    cols = tuple(sorted({j for _, j in members}))
    return members, rows, cols


def _rectangle_in_support(matrix: BandMatrix, rows: Sequence[int], cols: Sequence[int]) -> bool:
    entries = matrix.entries
    return all((i, j) in entries for i in rows for j in cols)


# ---------------------------------------------------------------------------
# Tropical
# ---------------------------------------------------------------------------


def _tropical_witness(
    matrix: BandMatrix, alpha: Collection[Position], counter: OperationCounter | None = None
) -> RankOneSummand | None:
    members, rows, cols = _prepare(matrix, alpha)
    if not _rectangle_in_support(matrix, rows, cols):
        return None

    by_row: dict[int, list[int]] = defaultdict(list)
    by_col: dict[int, list[int]] = defaultdict(list)
    for i, j in members:
        by_row[i].append(j)
        by_col[j].append(i)

    # Equalities u_i·v_j = M_ij propagate along each connected component.
    u: dict[int, Rational] = {}
    v: dict[int, Rational] = {}
    row_comp: dict[int, int] = {}
    col_comp: dict[int, int] = {}
    components = 0
    for root in rows:
        if root in row_comp:
            continue
        row_comp[root] = components
        u[root] = ONE
        queue: list[tuple[str, int]] = [("r", root)]
        while queue:
            side, index = queue.pop()
            if side == "r":
                for j in by_row[index]:
                    value = matrix.get(index, j) / u[index]
                    if counter is not None:
                        counter.tick()
                    if j in v:
                        if v[j] != value:
                            return None
                    else:
                        v[j] = value
                        col_comp[j] = components
                        queue.append(("c", j))
            else:
                for i in by_col[index]:
                    value = matrix.get(i, index) / v[index]
                    if counter is not None:
                        counter.tick()
                    if i in u:
                        if u[i] != value:
                            return None
                    else:
                        u[i] = value
                        row_comp[i] = components
                        queue.append(("r", i))
        components += 1

    # Strict inequalities on the rest of the rectangle: λ_ci/λ_cj < M_ij/(u_i v_j).
    constraints: list[RatioConstraint] = []
    for i in rows:
        for j in cols:
            if (i, j) in members:
                continue
            base = u[i] * v[j]
            if counter is not None:
                counter.tick(2)
            ci, cj = row_comp[i], col_comp[j]
            if ci == cj:
                if base >= matrix.get(i, j):
                    return None
            else:
                bound = matrix.get(i, j) / base
                constraints.append(RatioConstraint(source=cj, target=ci, bound=bound))

    if not strictly_feasible(components, constraints, counter):
        return None
    scales = solve_strict(components, constraints, counter)

    witness = RankOneSummand(
        rows=rows,
        cols=cols,
        u=tuple(scales[row_comp[i]] * u[i] for i in rows),
        v=tuple(v[j] / scales[col_comp[j]] for j in cols),
    )
    if not witness_realizes(matrix, members, witness, SemiringKind.TROPICAL):
        raise InvariantViolationError(f"Tropical witness for {sorted(members)} failed verification")
    return witness


def t_admissible(matrix: BandMatrix, alpha: Iterable[Position]) -> RankOneSummand | None:
    """
    Witness (u, v) with u_i·v_j = M_ij on alpha and u_i·v_j < M_ij on the rest
    of rows(alpha) × cols(alpha), or None when alpha is not t-admissible.
    """
    check_carrier(matrix, SemiringKind.TROPICAL)
    return _tropical_witness(matrix, tuple(alpha))


# ---------------------------------------------------------------------------
# Fuzzy
# ---------------------------------------------------------------------------


def _fuzzy_witness(
    matrix: BandMatrix, alpha: Collection[Position], counter: OperationCounter | None = None
) -> RankOneSummand | None:
    members, rows, cols = _prepare(matrix, alpha)
    if not _rectangle_in_support(matrix, rows, cols):
        return None

    # Equalities force u_i, v_j >= M_ij; every other constraint prefers smaller
    # values, so the componentwise minimal point decides feasibility.
    u = {i: max(matrix.get(i, j) for j in cols if (i, j) in members) for i in rows}
    v = {j: max(matrix.get(i, j) for i in rows if (i, j) in members) for j in cols}
    for i in rows:
        for j in cols:
            value = min(u[i], v[j])
            if counter is not None:
                counter.tick()
            target = matrix.get(i, j)
            if (i, j) in members:
                if value != target:
                    return None
            elif value >= target:
                return None

    return RankOneSummand(
        rows=rows, cols=cols, u=tuple(u[i] for i in rows), v=tuple(v[j] for j in cols)
    )


def f_admissible(matrix: BandMatrix, alpha: Iterable[Position]) -> RankOneSummand | None:
    """
    Witness (u, v) in (0, 1] with min(u_i, v_j) = M_ij on alpha and
    min(u_i, v_j) < M_ij on the rest of the rectangle, or None.
    """
    check_carrier(matrix, SemiringKind.FUZZY)
    return _fuzzy_witness(matrix, tuple(alpha))


# ---------------------------------------------------------------------------
# Boolean
# ---------------------------------------------------------------------------


def _boolean_witness(
    matrix: BandMatrix, alpha: Collection[Position], counter: OperationCounter | None = None
) -> RankOneSummand | None:
    members, rows, cols = _prepare(matrix, alpha)
    if len(members) != len(rows) * len(cols) or not _rectangle_in_support(matrix, rows, cols):
        return None
    return RankOneSummand(rows=rows, cols=cols, u=(ONE,) * len(rows), v=(ONE,) * len(cols))


def boolean_admissible(matrix: BandMatrix, alpha: Iterable[Position]) -> bool:
    """True iff alpha is a full combinatorial rectangle inside the support."""
    return _boolean_witness(matrix, tuple(alpha)) is not None


ORACLES: dict[SemiringKind, Oracle] = {
    SemiringKind.TROPICAL: _tropical_witness,
    SemiringKind.FUZZY: _fuzzy_witness,
    SemiringKind.BOOLEAN: _boolean_witness,
}


def oracle_for(kind: SemiringKind) -> Oracle:
    if not kind.is_max_based:
        raise UnsupportedKindError(
            f"Admissible sets are defined for max-based semirings only, not {kind.value}"
        )
    return ORACLES[kind]


def witness_realizes(
    matrix: BandMatrix, alpha: Collection[Position], witness: RankOneSummand, kind: SemiringKind
) -> bool:
    """Exact check that ``witness`` is dominated by the matrix with equality exactly on alpha."""
    members = frozenset(alpha)
    if kind is SemiringKind.FUZZY and any(x > 1 for x in (*witness.u, *witness.v)):
        return False
    if any(x <= 0 for x in (*witness.u, *witness.v)):
        return False
    for i, u_i in zip(witness.rows, witness.u, strict=True):
        for j, v_j in zip(witness.cols, witness.v, strict=True):
            target = matrix.get(i, j)
            if target == 0:
                return False
            value = min(u_i, v_j) if kind is SemiringKind.FUZZY else u_i * v_j
            if (i, j) in members:
                if value != target:
                    return False
            elif value >= target:
                return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def window_for(matrix: BandMatrix, anchor: Position) -> Window:
    i, j = anchor
    reach = 2 * matrix.k
    return Window(
        anchor=anchor,
        row_range=(max(1, i - reach), min(matrix.n, i + reach)),
        col_range=(max(1, j - reach), min(matrix.n, j + reach)),
    )


def _subsets_spanning(
    positions: Sequence[Position],
    required: Position,
    rows: Sequence[int],
    cols: Sequence[int],
) -> Iterator[tuple[Position, ...]]:
    """Subsets of ``positions`` containing ``required`` that span exactly ``rows`` × ``cols``."""
    optional = [p for p in positions if p != required]
    need_rows, need_cols = set(rows), set(cols)
    for extra in chain.from_iterable(combinations(optional, r) for r in range(len(optional) + 1)):
        alpha = (required, *extra)
        if {i for i, _ in alpha} == need_rows and {j for _, j in alpha} == need_cols:
            yield tuple(sorted(alpha))


def _test_candidates(
    matrix: BandMatrix,
    kind: SemiringKind,
    candidates: Iterable[tuple[Position, ...]],
    counter: OperationCounter | None,
) -> Iterator[AdmissibleSet]:
    oracle = oracle_for(kind)
    for alpha in candidates:
        witness = oracle(matrix, alpha, counter)
        if witness is not None:
            yield AdmissibleSet(alpha=alpha, kind=kind, witness=witness)


def admissible_sets_at(
    matrix: BandMatrix,
    window: Window,
    kind: SemiringKind,
    counter: OperationCounter | None = None,
) -> list[AdmissibleSet]:
    """
    All admissible sets whose row-major first position is the window's anchor.

    Candidate rectangles I'×J' ⊆ S(M) are taken inside the window with the
    anchor row as the smallest row; every subset spanning the rectangle is
    tested.
    """
    i, j = window.anchor
    entries = matrix.entries
    found: list[AdmissibleSet] = []

    lower_rows = range(i + 1, window.row_range[1] + 1)
    window_cols = range(window.col_range[0], window.col_range[1] + 1)
    for extra_rows in _powerset(tuple(lower_rows)):
        row_set = (i, *extra_rows)
        common = [c for c in window_cols if all((r, c) in entries for r in row_set)]
        if j not in common:
            continue
        others = tuple(c for c in common if c != j)
        for extra_cols in _powerset(others):
            col_set = tuple(sorted((j, *extra_cols)))
            rectangle = [
                (r, c) for r in row_set for c in col_set if not (r == i and c < j)
            ]
            if kind is SemiringKind.BOOLEAN:
                if len(rectangle) != len(row_set) * len(col_set):
                    continue
                candidates: Iterable[tuple[Position, ...]] = [tuple(sorted(rectangle))]
            else:
                candidates = _subsets_spanning(rectangle, (i, j), row_set, col_set)
            found.extend(_test_candidates(matrix, kind, candidates, counter))
    return found


def maximal_sets(sets: Iterable[AdmissibleSet]) -> list[AdmissibleSet]:
    """Inclusion-maximal members, deduplicated on alpha, in row-major order of alpha."""
    unique: dict[Support, AdmissibleSet] = {}
    for s in sets:
        unique.setdefault(s.alpha, s)

    containing: dict[Position, list[AdmissibleSet]] = defaultdict(list)
    for s in unique.values():
        for position in s.alpha:
            containing[position].append(s)

    result = []
    for s in unique.values():
        candidates = containing[s.alpha[0]]
        dominated = any(
            len(other) > len(s) and s.members <= other.members for other in candidates
        )
        if not dominated:
            result.append(s)
    return sorted(result, key=lambda s: s.alpha)


def _check_kind(matrix: BandMatrix, kind: SemiringKind) -> None:
    oracle_for(kind)
    # Boolean admissibility only reads the support pattern
    check_carrier(matrix, SemiringKind.TROPICAL if kind is SemiringKind.BOOLEAN else kind)


def enumerate_maximal_admissible(
    matrix: BandMatrix, kind: SemiringKind, counter: OperationCounter | None = None
) -> list[AdmissibleSet]:
    """Every inclusion-maximal admissible subset of S(M), each once, with its witness."""
    _check_kind(matrix, kind)
    collected: list[AdmissibleSet] = []
    for anchor in matrix.positions():
        collected.extend(admissible_sets_at(matrix, window_for(matrix, anchor), kind, counter))
    if counter is not None:
        counter.sets_enumerated += len(collected)
    maximal = maximal_sets(collected)
    logger.debug(
        "Enumerated %d admissible sets (%d maximal) for %s on n=%d",
        len(collected),
        len(maximal),
        kind.value,
        matrix.n,
    )
    return maximal


def enumerate_all_admissible(matrix: BandMatrix, kind: SemiringKind) -> list[AdmissibleSet]:
    """
    Every admissible subset of S(M), found without windows.

    Rectangles are formed from arbitrary row subsets and their common support
    columns, so nothing here relies on the band structure.
    """
    _check_kind(matrix, kind)
    entries = matrix.entries
    nonzero_rows = sorted({i for i, _ in matrix.positions()})
    found: list[AdmissibleSet] = []
    for size in range(1, len(nonzero_rows) + 1):
        for row_set in combinations(nonzero_rows, size):
            common = [c for c in range(1, matrix.n + 1) if all((r, c) in entries for r in row_set)]
            for col_count in range(1, len(common) + 1):
                for col_set in combinations(common, col_count):
                    rectangle = [(r, c) for r in row_set for c in col_set]
                    if kind is SemiringKind.BOOLEAN:
                        candidates: Iterable[tuple[Position, ...]] = [tuple(rectangle)]
                    else:
                        candidates = _all_spanning(rectangle, row_set, col_set)
                    found.extend(_test_candidates(matrix, kind, candidates, None))
    return found


def _all_spanning(
    rectangle: Sequence[Position], rows: Sequence[int], cols: Sequence[int]
) -> Iterator[tuple[Position, ...]]:
    need_rows, need_cols = set(rows), set(cols)
    for mask in range(1, 1 << len(rectangle)):
        alpha = tuple(p for bit, p in enumerate(rectangle) if mask >> bit & 1)
        if {i for i, _ in alpha} == need_rows and {j for _, j in alpha} == need_cols:
            yield alpha
