"""
Boolean, fuzzy and tropical factorization ranks of band matrices.

Over a max-based semiring a sum of rank-one matrices is their entrywise
maximum, so the rank is the smallest number of admissible sets covering the
support. The cover is solved by a sweep over the vertex layout whose state only
remembers coverage of entries still ahead of the sweep.
"""

import logging
import time
from collections.abc import Sequence

from rankkit.config.settings import get_settings
from rankkit.domain.cover.exceptions import (
    CertificateRejectedError,
    TooLargeError,
    UncoverableError,
)
from rankkit.domain.cover.models import CoverInstance, CoverSolution
from rankkit.domain.matrices.models import BandMatrix
from rankkit.domain.semirings.models import (
    RankCertificate,
    RankOneSummand,
    RankResult,
    RunStats,
    SemiringKind,
)
from rankkit.service_layer.admissible.services import (
    enumerate_all_admissible,
    enumerate_maximal_admissible,
    maximal_sets,
    oracle_for,
)
from rankkit.service_layer.semirings.services import check_carrier, verify_certificate
from rankkit.shared.counters import OperationCounter
from rankkit.shared.exceptions import InvariantViolationError

logger = logging.getLogger(__name__)

# (cost, key): key has bit (N-1-s) set when set s is chosen, so among equal
# costs the larger key is the lexicographically smaller index list.
_DpValue = tuple[int, int]


def build_cover_instance(
    matrix: BandMatrix, kind: SemiringKind, counter: OperationCounter | None = None
) -> CoverInstance:
    """Hitting-set instance of ``matrix`` with the first-appearance layout."""
    oracle_for(kind)
    if matrix.is_zero:
        check_carrier(matrix, SemiringKind.TROPICAL)
        return CoverInstance((), (), (), (), (), (), 0)

    found = enumerate_maximal_admissible(matrix, kind, counter)
    elements = tuple(matrix.positions())
    element_index = {p: e for e, p in enumerate(elements)}

    members = [tuple(sorted(element_index[p] for p in s.alpha)) for s in found]
    order = sorted(range(len(found)), key=lambda s: (members[s][0], found[s].alpha))
    sets = tuple(found[s] for s in order)
    set_members = tuple(members[s] for s in order)

    incidence: list[list[int]] = [[] for _ in elements]
    for s, element_ids in enumerate(set_members):
        for e in element_ids:
            incidence[e].append(s)

    # u_1, sets first containing u_1, u_2, sets first containing u_2, ...
    element_layout = [0] * len(elements)
    set_layout = [0] * len(sets)
    position = 0
    s = 0
    for e in range(len(elements)):
        position += 1
        element_layout[e] = position
        while s < len(sets) and set_members[s][0] == e:
            position += 1
            set_layout[s] = position
            s += 1

    spread = max(
        (abs(element_layout[e] - set_layout[s]) for s, ids in enumerate(set_members) for e in ids),
        default=0,
    )
    logger.debug(
        "Cover instance: %d elements, %d sets, spread bound %d", len(elements), len(sets), spread
    )
    return CoverInstance(
        sets=sets,
        elements=elements,
        incidence=tuple(tuple(ids) for ids in incidence),
        set_members=set_members,
        element_layout=tuple(element_layout),
        set_layout=tuple(set_layout),
        spread_bound=spread,
    )


def _offer(states: dict[int, _DpValue], mask: int, value: _DpValue) -> None:
    current = states.get(mask)
    if current is None or (value[0], -value[1]) < (current[0], -current[1]):
        states[mask] = value


def solve_cover_dp(
    instance: CoverInstance, counter: OperationCounter | None = None
) -> CoverSolution:
    """
    Minimum cover by a left-to-right sweep of the layout.

    At a set position the set is either taken or skipped; at the next element
    position the previous element must already be covered and is retired. The
    state is the coverage bitmask of elements not yet retired, relative to the
    sweep; ties go to the lexicographically smallest index list.
    """
    if instance.is_empty:
        return CoverSolution(chosen=())

    total_sets = len(instance.sets)
    new_sets: list[list[int]] = [[] for _ in instance.elements]
    for s, ids in enumerate(instance.set_members):
        new_sets[ids[0]].append(s)

    states: dict[int, _DpValue] = {0: (0, 0)}
    for e in range(len(instance.elements)):
        for s in new_sets[e]:
            bits = 0
            for member in instance.set_members[s]:
                bits |= 1 << (member - e)
            weight = 1 << (total_sets - 1 - s)
            branched: dict[int, _DpValue] = {}
            for mask, (cost, key) in states.items():
                _offer(branched, mask, (cost, key))
                _offer(branched, mask | bits, (cost + 1, key | weight))
            states = branched
            if counter is not None:
                counter.dp_states += len(states)

        retired: dict[int, _DpValue] = {}
        for mask, value in states.items():
            if mask & 1:
                _offer(retired, mask >> 1, value)
        if not retired:
            raise UncoverableError(f"Support entry {instance.elements[e]} is in no admissible set")
        states = retired

    cost, key = states[0]
    bits = format(key, f"0{total_sets}b")
    chosen = tuple(s for s, bit in enumerate(bits) if bit == "1")
    if len(chosen) != cost:
        raise InvariantViolationError(f"Cover key selects {len(chosen)} sets for cost {cost}")
    return CoverSolution(chosen=chosen)


def _element_masks(instance: CoverInstance) -> list[int]:
    masks = []
    for ids in instance.set_members:
        mask = 0
        for e in ids:
            mask |= 1 << e
        masks.append(mask)
    return masks


def solve_cover_exhaustive(instance: CoverInstance, max_sets: int | None = None) -> CoverSolution:
    """
    Minimum cover by branch and bound over include/exclude decisions.

    Sets are decided in index order, including first, and only strictly smaller
    covers replace the incumbent, so the result is the lexicographically
    smallest minimum cover.
    """
    limit = max_sets if max_sets is not None else get_settings().exhaustive_max_sets
    if len(instance.sets) > limit:
        raise TooLargeError(
            f"Exhaustive cover is limited to {limit} sets, instance has {len(instance.sets)}"
        )
    if instance.is_empty:
        return CoverSolution(chosen=())

    masks = _element_masks(instance)
    full = (1 << len(instance.elements)) - 1
    suffix_union = [0] * (len(masks) + 1)
    for s in range(len(masks) - 1, -1, -1):
        suffix_union[s] = suffix_union[s + 1] | masks[s]
    if suffix_union[0] != full:
        missing = (full & ~suffix_union[0]).bit_length() - 1
        raise UncoverableError(
            f"Support entry {instance.elements[missing]} is in no admissible set"
        )

    best: list[int] | None = None
    chosen: list[int] = []

    def search(index: int, covered: int) -> None:
        nonlocal best
        if covered == full:
            if best is None or len(chosen) < len(best):
                best = list(chosen)
            return
        if best is not None and len(chosen) + 1 >= len(best):
            return
        if (full & ~covered) & ~suffix_union[index]:
            return
        chosen.append(index)
        search(index + 1, covered | masks[index])
        chosen.pop()
        search(index + 1, covered)

    search(0, 0)
    if best is None:
        raise UncoverableError("Exhaustive search found no cover")
    return CoverSolution(chosen=tuple(best))


def min_cover_size(element_count: int, masks: Sequence[int]) -> int:
    """Size of a minimum cover, branching on the lowest uncovered element."""
    full = (1 << element_count) - 1
    if full == 0:
        return 0
    containing: list[list[int]] = [[] for _ in range(element_count)]
    for s, mask in enumerate(masks):
        for e in range(element_count):
            if mask >> e & 1:
                containing[e].append(s)
    for e, sets in enumerate(containing):
        if not sets:
            raise UncoverableError(f"Element {e} is in no set")
        # larger sets first finds good covers early
        sets.sort(key=lambda s: -masks[s].bit_count())

    best = element_count

    def search(covered: int, count: int) -> None:
        nonlocal best
        if covered == full:
            best = min(best, count)
            return
        if count + 1 >= best:
            return
        uncovered = full & ~covered
        e = (uncovered & -uncovered).bit_length() - 1
        for s in containing[e]:
            search(covered | masks[s], count + 1)

    search(0, 0)
    return best


def _check_rank_input(matrix: BandMatrix, kind: SemiringKind) -> None:
    oracle_for(kind)
    check_carrier(matrix, kind)


def band_rank(matrix: BandMatrix, kind: SemiringKind) -> RankResult:
    """
    Factorization rank over a max-based semiring with a verifying certificate.

    The zero matrix has rank 0. Otherwise the rank is the size of a minimum
    cover of the support by maximal admissible sets, and the certificate is
    the chosen sets' witnesses.

    Args:
        matrix: Band matrix with entries in the carrier of ``kind``
        kind: Tropical, fuzzy or Boolean

    Returns:
        Rank, certificate and run statistics

    Raises:
        UnsupportedKindError: If ``kind`` is not max-based
        CertificateRejectedError: If the assembled certificate fails verification
    """
    _check_rank_input(matrix, kind)
    started = time.perf_counter()
    counter = OperationCounter()

    if matrix.is_zero:
        return RankResult(kind=kind, rank=0, certificate=RankCertificate(kind=kind))

    instance = build_cover_instance(matrix, kind, counter)
    solution = solve_cover_dp(instance, counter)

    summands: list[RankOneSummand] = []
    for s in solution.chosen:
        witness = instance.sets[s].witness
        if witness is None:
            raise InvariantViolationError(f"Admissible set {s} carries no witness")
        summands.append(witness)
    certificate = RankCertificate(kind=kind, summands=tuple(summands))
    if not verify_certificate(matrix, certificate):
        raise CertificateRejectedError(f"{kind.value} certificate failed exact verification")

    stats = RunStats(
        sets_enumerated=counter.sets_enumerated,
        dp_states=counter.dp_states,
        arithmetic_ops=counter.arithmetic_ops,
        wall_ms=(time.perf_counter() - started) * 1000,
    )
    logger.info(
        "%s rank of n=%d, k=%d: %d (%d maximal sets, %d DP states)",
        kind.value,
        matrix.n,
        matrix.k,
        solution.size,
        len(instance.sets),
        stats.dp_states,
    )
    return RankResult(kind=kind, rank=solution.size, certificate=certificate, stats=stats)


def brute_force_band_rank(
    matrix: BandMatrix, kind: SemiringKind, max_dimension: int | None = None
) -> int:
    """
    Rank from every admissible subset found without windows and an exhaustive cover.

    Shares nothing with ``band_rank`` beyond the admissibility oracles.

    Args:
        matrix: Band matrix with entries in the carrier of ``kind``
        kind: Tropical, fuzzy or Boolean
        max_dimension: Largest accepted n; defaults to the configured oracle limit

    Returns:
        The rank

    Raises:
        TooLargeError: If n exceeds ``max_dimension``
    """
    limit = max_dimension if max_dimension is not None else get_settings().oracle_max_dimension
    if matrix.n > limit:
        raise TooLargeError(f"Brute-force rank is limited to n <= {limit}, got n={matrix.n}")
    _check_rank_input(matrix, kind)
    if matrix.is_zero:
        return 0

    elements = {p: e for e, p in enumerate(matrix.positions())}
    masks = []
    for s in maximal_sets(enumerate_all_admissible(matrix, kind)):
        mask = 0
        for p in s.alpha:
            mask |= 1 << elements[p]
        masks.append(mask)
    return min_cover_size(len(elements), masks)
