"""
Nonnegative rank of tridiagonal matrices in a linear number of operations.

The matrix is cut into blocks with nonzero off-diagonals. A block of size m has
nonnegative rank m or m-1, decided by a single left-to-right residual pass;
full blocks peel off on their own, a deficient block drags along the following
blocks it is joined to by upper couplers.
"""

import logging
import time
from collections.abc import Sequence

from rankkit.domain.cover.exceptions import CertificateRejectedError
from rankkit.domain.matrices.models import ONE, ZERO, BandMatrix, DenseMatrix, Rational
from rankkit.domain.semirings.models import (
    RankCertificate,
    RankOneSummand,
    RankResult,
    RunStats,
    SemiringKind,
)
from rankkit.domain.tridiagonal.exceptions import NotTridiagonalError, PreconditionViolatedError
from rankkit.domain.tridiagonal.models import (
    BlockDecomposition,
    Coupler,
    CouplerKind,
    FullRankOutcome,
    NnrTrace,
    TraceSegment,
    TridiagonalBlock,
)
from rankkit.service_layer.matrices.services import delete_rows_cols
from rankkit.service_layer.semirings.services import check_carrier, verify_certificate
from rankkit.shared.counters import OperationCounter

logger = logging.getLogger(__name__)


def _line(index: int, others: Sequence[tuple[int, Rational]], as_row: bool) -> RankOneSummand:
    """Rank-one piece supported on one row (or column) ``index``, positive entries only."""
    kept = [(other, value) for other, value in others if value > 0]
    line = RankOneSummand(
        rows=(index,),
        cols=tuple(other for other, _ in kept),
        u=(ONE,),
        v=tuple(value for _, value in kept),
    )
    return line if as_row else line.transposed()


def tridiagonal_arrays(
    matrix: BandMatrix,
) -> tuple[list[Rational], list[Rational], list[Rational]]:
    """0-based diagonal, superdiagonal and subdiagonal of a tridiagonal matrix."""
    for i, j in matrix.positions():
        if abs(i - j) > 1:
            raise NotTridiagonalError(f"Entry ({i}, {j}) lies outside the tridiagonal band")
    n = matrix.n
    diag = [matrix.get(i, i) for i in range(1, n + 1)]
    upper = [matrix.get(i, i + 1) for i in range(1, n)]
    lower = [matrix.get(i + 1, i) for i in range(1, n)]
    return diag, upper, lower


def block_decompose(
    matrix: BandMatrix, counter: OperationCounter | None = None
) -> BlockDecomposition:
    """Split into maximal blocks with nonzero sub/superdiagonals and record the couplers."""
    diag, upper, lower = tridiagonal_arrays(matrix)
    n = matrix.n

    offsets: list[int] = []
    couplers: list[Coupler] = []
    start = 0
    for i in range(n):
        if counter is not None:
            counter.tick(2)
        if i < n - 1 and upper[i] != 0 and lower[i] != 0:
            continue
        offsets.append(start)
        if i < n - 1:
            if upper[i] != 0:
                couplers.append(Coupler(CouplerKind.UPPER, upper[i]))
            elif lower[i] != 0:
                couplers.append(Coupler(CouplerKind.LOWER, lower[i]))
            else:
                couplers.append(Coupler())
        start = i + 1

    blocks = []
    for b, offset in enumerate(offsets):
        end = offsets[b + 1] if b + 1 < len(offsets) else n
        blocks.append(
            TridiagonalBlock(
                diag=tuple(diag[offset:end]),
                upper=tuple(upper[offset : end - 1]),
                lower=tuple(lower[offset : end - 1]),
            )
        )
    return BlockDecomposition(
        blocks=tuple(blocks), couplers=tuple(couplers), offsets=tuple(offsets)
    )


def _residual_rows(
    pos: int,
    pivot: Rational,
    diag: Sequence[Rational],
    upper: Sequence[Rational],
    lower: Sequence[Rational],
) -> list[RankOneSummand]:
    """Rows pos.. of the residual block (0-based), whose pos-th diagonal entry is ``pivot``."""
    size = len(diag)
    rows = []
    for q in range(pos, size):
        others: list[tuple[int, Rational]] = []
        if q > pos:
            others.append((q, lower[q - 1]))
        others.append((q + 1, pivot if q == pos else diag[q]))
        if q + 1 < size:
            others.append((q + 2, upper[q]))
        rows.append(_line(q + 1, others, as_row=True))
    return rows


def _walk_block(
    diag: Sequence[Rational],
    upper: Sequence[Rational],
    lower: Sequence[Rational],
    counter: OperationCounter | None = None,
) -> FullRankOutcome:
    """
    Decide whether a block with nonzero off-diagonals has full nonnegative rank.

    Positive pivot: the rank-one piece matching the first row and column is
    forced; subtracting it leaves residual r = D22 - D21·D12/D11 in the next
    pivot, and r < 0 means full rank. Zero pivot: the first column has a single
    nonzero, so one row and one column peel off and the walk skips two indices.
    The walk ends full on an exhausted block or a positive last pivot, deficient
    on a zero last pivot.
    """
    size = len(diag)
    chain: list[RankOneSummand] = []
    pos = 0
    pivot = diag[0] if size else ZERO
    full = True
    while pos < size:
        if pos == size - 1:
            if counter is not None:
                counter.tick()
            full = pivot > 0
            if full:
                chain.append(_line(pos + 1, [(pos + 1, pivot)], as_row=True))
            break
        if counter is not None:
            counter.tick()
        if pivot == 0:
            row = [(pos + 1, lower[pos]), (pos + 2, diag[pos + 1])]
            if pos + 2 < size:
                row.append((pos + 3, upper[pos + 1]))
            column = [(pos + 1, upper[pos])]
            if pos + 2 < size:
                column.append((pos + 3, lower[pos + 1]))
            chain.append(_line(pos + 2, row, as_row=True))
            chain.append(_line(pos + 2, column, as_row=False))
            pos += 2
            pivot = diag[pos] if pos < size else ZERO
            continue

        residual = diag[pos + 1] - lower[pos] * upper[pos] / pivot
        if counter is not None:
            counter.tick(4)
        if residual < 0:
            chain.extend(_residual_rows(pos, pivot, diag, upper, lower))
            full = True
            break
        chain.append(
            RankOneSummand(
                rows=(pos + 1, pos + 2),
                cols=(pos + 1, pos + 2),
                u=(pivot, lower[pos]),
                v=(ONE, upper[pos] / pivot),
            )
        )
        pos += 1
        pivot = residual

    value = size if full else size - 1
    return FullRankOutcome(size=size, value=value, chain=tuple(chain))


def full_rank_check(block: DenseMatrix, counter: OperationCounter | None = None) -> FullRankOutcome:
    """Nonnegative rank (size or size-1) of a tridiagonal block with nonzero off-diagonals."""
    if block.rows != block.cols or block.rows == 0:
        raise PreconditionViolatedError("Block must be square and nonempty")
    size = block.rows
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            value = block.get(i, j)
            if value < 0:
                raise PreconditionViolatedError(f"Entry ({i}, {j}) is negative")
            if abs(i - j) > 1 and value != 0:
                raise PreconditionViolatedError(f"Entry ({i}, {j}) is outside the tridiagonal band")
            if abs(i - j) == 1 and value == 0:
                raise PreconditionViolatedError(f"Off-diagonal entry ({i}, {j}) is zero")
    diag = [block.get(i, i) for i in range(1, size + 1)]
    upper = [block.get(i, i + 1) for i in range(1, size)]
    lower = [block.get(i + 1, i) for i in range(1, size)]
    return _walk_block(diag, upper, lower, counter)


def peel_single_nonzero(matrix: DenseMatrix, i: int, j: int) -> tuple[DenseMatrix, int]:
    """
    Remove row i and column j when (i, j) is the only nonzero of its column
    (or of its row); the nonnegative rank drops by exactly one.
    """
    if not (1 <= i <= matrix.rows and 1 <= j <= matrix.cols) or matrix.get(i, j) <= 0:
        raise PreconditionViolatedError(f"Entry ({i}, {j}) must be positive")
    column_alone = all(matrix.get(r, j) == 0 for r in range(1, matrix.rows + 1) if r != i)
    row_alone = all(matrix.get(i, c) == 0 for c in range(1, matrix.cols + 1) if c != j)
    if not (column_alone or row_alone):
        raise PreconditionViolatedError(
            f"Entry ({i}, {j}) is not the only nonzero of its row or column"
        )
    return delete_rows_cols(matrix, {i}, {j}), 1


def _upper_in_view(coupler: Coupler, transposed: bool) -> bool:
    return coupler.kind is (CouplerKind.LOWER if transposed else CouplerKind.UPPER)


def nnr_trace(matrix: BandMatrix, counter: OperationCounter | None = None) -> NnrTrace:
    """
    Run the block recursion and record each segment.

    Each segment is read in the orientation where its first coupler is not a
    lower one (transposing otherwise).
    """
    decomposition = block_decompose(matrix, counter)
    sizes = decomposition.sizes
    couplers = decomposition.couplers
    block_count = len(sizes)

    segments: list[TraceSegment] = []
    b = 0
    while b < block_count:
        transposed = b < block_count - 1 and couplers[b].kind is CouplerKind.LOWER
        block, size = decomposition.blocks[b], sizes[b]
        view_upper, view_lower = (
            (block.lower, block.upper) if transposed else (block.upper, block.lower)
        )
        outcome = _walk_block(block.diag, view_upper, view_lower, counter)
        if outcome.is_full:
            segments.append(TraceSegment(b, b, transposed, outcome, size))
            b += 1
            continue

        t = b
        while t < block_count - 1 and _upper_in_view(couplers[t], transposed):
            t += 1
        rank = sum(sizes[b : t + 1]) - 1
        segments.append(TraceSegment(b, t, transposed, outcome, rank))
        logger.debug("Deficient block %d joins blocks up to %d (rank %d)", b, t, rank)
        b = t + 1
    return NnrTrace(decomposition=decomposition, segments=tuple(segments))


def nnr_certificate(matrix: BandMatrix, trace: NnrTrace) -> RankCertificate:
    """
    Rank-one summands realizing the traced rank.

    Full segment: the rows of its block, including a trailing upper coupler.
    Deficient segment: the residual pieces of its first block, then every
    column of each joined block (the chain of single-nonzero peels).
    """
    diag, upper, lower = tridiagonal_arrays(matrix)
    n = matrix.n
    offsets, sizes = trace.decomposition.offsets, trace.decomposition.sizes

    summands: list[RankOneSummand] = []
    for segment in trace.segments:
        view_upper, view_lower = (lower, upper) if segment.transposed else (upper, lower)
        start = offsets[segment.first_block]
        pieces: list[RankOneSummand] = []
        if segment.outcome.is_full:
            for q in range(start, start + sizes[segment.first_block]):
                row: list[tuple[int, Rational]] = []
                if q - 1 >= start:
                    row.append((q, view_lower[q - 1]))
                row.append((q + 1, diag[q]))
                if q + 1 < n:
                    row.append((q + 2, view_upper[q]))
                pieces.append(_line(q + 1, row, as_row=True))
        else:
            pieces.extend(piece.shifted(start) for piece in segment.outcome.chain)
            for b in range(segment.first_block + 1, segment.last_block + 1):
                for c in range(offsets[b], offsets[b] + sizes[b]):
                    column = [(c, view_upper[c - 1]), (c + 1, diag[c])]
                    if c + 1 < n:
                        column.append((c + 2, view_lower[c]))
                    pieces.append(_line(c + 1, column, as_row=False))
        if segment.transposed:
            pieces = [piece.transposed() for piece in pieces]
        summands.extend(pieces)
    return RankCertificate(kind=SemiringKind.NONNEGATIVE, summands=tuple(summands))


def nnr_tridiagonal(matrix: BandMatrix) -> RankResult:
    """
    Exact nonnegative rank of a tridiagonal matrix with a verifying certificate.

    Args:
        matrix: Nonnegative matrix with nonzero entries only on the three central diagonals

    Returns:
        Rank, certificate and the arithmetic operation count

    Raises:
        NotTridiagonalError: If an entry lies outside the tridiagonal band
        CertificateRejectedError: If the certificate fails verification
    """
    check_carrier(matrix, SemiringKind.NONNEGATIVE)
    tridiagonal_arrays(matrix)
    started = time.perf_counter()
    counter = OperationCounter()

    if matrix.is_zero:
        return RankResult(
            kind=SemiringKind.NONNEGATIVE,
            rank=0,
            certificate=RankCertificate(kind=SemiringKind.NONNEGATIVE),
        )

    trace = nnr_trace(matrix, counter)
    certificate = nnr_certificate(matrix, trace)
    if len(certificate) != trace.rank or not verify_certificate(matrix, certificate):
        raise CertificateRejectedError(
            f"Nonnegative certificate with {len(certificate)} summands failed for rank {trace.rank}"
        )

    stats = RunStats(
        arithmetic_ops=counter.arithmetic_ops,
        wall_ms=(time.perf_counter() - started) * 1000,
    )
    logger.info(
        "Nonnegative rank of n=%d: %d (%d blocks, %d ops)",
        matrix.n,
        trace.rank,
        len(trace.decomposition.blocks),
        counter.arithmetic_ops,
    )
    return RankResult(
        kind=SemiringKind.NONNEGATIVE, rank=trace.rank, certificate=certificate, stats=stats
    )
