# Semiring arithmetic, certificate assembly and verification

import logging
from collections.abc import Callable, Iterable

from rankkit.domain.matrices.exceptions import OutOfRangeError
from rankkit.domain.matrices.models import ONE, ZERO, BandMatrix, DenseMatrix, Rational
from rankkit.domain.semirings.exceptions import CarrierViolationError, DimensionMismatchError
from rankkit.domain.semirings.models import RankCertificate, RankOneSummand, SemiringKind

logger = logging.getLogger(__name__)

BinaryOp = Callable[[Rational, Rational], Rational]


def _plus(a: Rational, b: Rational) -> Rational:
    return a + b


def _times(a: Rational, b: Rational) -> Rational:
    return a * b


# (⊕, ⊙) for each semiring
OPERATIONS: dict[SemiringKind, tuple[BinaryOp, BinaryOp]] = {
    SemiringKind.BOOLEAN: (max, _times),
    SemiringKind.FUZZY: (max, min),
    SemiringKind.TROPICAL: (max, _times),
    SemiringKind.NONNEGATIVE: (_plus, _times),
}


def semiring_add(kind: SemiringKind, a: Rational, b: Rational) -> Rational:
    return OPERATIONS[kind][0](a, b)


def semiring_mul(kind: SemiringKind, a: Rational, b: Rational) -> Rational:
    return OPERATIONS[kind][1](a, b)


def in_carrier(kind: SemiringKind, value: Rational) -> bool:
    if kind is SemiringKind.BOOLEAN:
        return value in (ZERO, ONE)
    if kind is SemiringKind.FUZZY:
        return ZERO <= value <= ONE
    return value >= ZERO


def check_values(kind: SemiringKind, values: Iterable[Rational], what: str = "entry") -> None:
    """Raise CarrierViolationError for the first value outside ``kind``'s carrier."""
    for value in values:
        if not in_carrier(kind, value):
            raise CarrierViolationError(f"{what} {value} is outside the {kind.value} carrier")


def check_carrier(matrix: DenseMatrix | BandMatrix, kind: SemiringKind) -> None:
    if isinstance(matrix, BandMatrix):
        check_values(kind, matrix.entries.values())
    else:
        check_values(kind, (value for row in matrix.values for value in row))


def semiring_multiply(b: DenseMatrix, c: DenseMatrix, kind: SemiringKind) -> DenseMatrix:
    """(B⊙C)_ij = ⊕_t B_it ⊙ C_tj with the operations of ``kind``."""
    if b.cols != c.rows:
        raise DimensionMismatchError(f"Cannot multiply {b.rows}x{b.cols} by {c.rows}x{c.cols}")
    check_carrier(b, kind)
    check_carrier(c, kind)

    add, mul = OPERATIONS[kind]
    values = []
    for i in range(b.rows):
        row = []
        for j in range(c.cols):
            acc = ZERO
            for t in range(b.cols):
                acc = add(acc, mul(b.values[i][t], c.values[t][j]))
            row.append(acc)
        values.append(tuple(row))
    return DenseMatrix(rows=b.rows, cols=c.cols, values=tuple(values))


def summand_entries(
    summand: RankOneSummand, kind: SemiringKind
) -> Iterable[tuple[int, int, Rational]]:
    mul = OPERATIONS[kind][1]
    for i, u_i in zip(summand.rows, summand.u, strict=True):
        for j, v_j in zip(summand.cols, summand.v, strict=True):
            yield i, j, mul(u_i, v_j)


def certificate_matrix(certificate: RankCertificate, n: int) -> DenseMatrix:
    """Semiring sum of the certificate's summands as an n×n matrix."""
    add = OPERATIONS[certificate.kind][0]
    grid = [[ZERO] * n for _ in range(n)]
    for summand in certificate.summands:
        for i, j, value in summand_entries(summand, certificate.kind):
            if not (1 <= i <= n and 1 <= j <= n):
                raise OutOfRangeError(f"Summand position ({i}, {j}) outside 1..{n}")
            grid[i - 1][j - 1] = add(grid[i - 1][j - 1], value)
    return DenseMatrix(rows=n, cols=n, values=tuple(tuple(r) for r in grid))


def verify_certificate(matrix: BandMatrix, certificate: RankCertificate) -> bool:
    """
    Check that the certificate reconstructs ``matrix`` exactly.

    Args:
        matrix: The matrix the certificate claims to factor
        certificate: Rank-one summands and their semiring

    Returns:
        True on an exact match; False on any mismatch, out-of-range position or
        factor outside the carrier
    """
    for summand in certificate.summands:
        if len(summand.u) != len(summand.rows) or len(summand.v) != len(summand.cols):
            return False
        if any(x <= 0 for x in (*summand.u, *summand.v)):
            return False
        if certificate.kind is SemiringKind.FUZZY and any(x > 1 for x in (*summand.u, *summand.v)):
            return False
    # Sparse accumulation: only positions touched by some summand can be nonzero.
    add = OPERATIONS[certificate.kind][0]
    rebuilt: dict[tuple[int, int], Rational] = {}
    for summand in certificate.summands:
        for i, j, value in summand_entries(summand, certificate.kind):
            if not (1 <= i <= matrix.n and 1 <= j <= matrix.n):
                return False
            rebuilt[(i, j)] = add(rebuilt.get((i, j), ZERO), value)

    nonzero = {p: value for p, value in rebuilt.items() if value != 0}
    if nonzero != matrix.entries:
        mismatched = sorted(set(nonzero.items()) ^ set(matrix.entries.items()))
        logger.debug("Certificate mismatch at %s", mismatched[:5])
        return False
    return True


def certificate_factors(certificate: RankCertificate, n: int) -> tuple[DenseMatrix, DenseMatrix]:
    """
    Factor pair (B, C) with B ⊙ C equal to the certificate matrix.

    Column t of B is summand t's ``u`` padded with zeros, row t of C is its
    ``v`` padded with zeros.
    """
    r = len(certificate.summands)
    b = [[ZERO] * r for _ in range(n)]
    c = [[ZERO] * n for _ in range(r)]
    for t, summand in enumerate(certificate.summands):
        for i, u_i in zip(summand.rows, summand.u, strict=True):
            b[i - 1][t] = u_i
        for j, v_j in zip(summand.cols, summand.v, strict=True):
            c[t][j - 1] = v_j
    return (
        DenseMatrix(rows=n, cols=r, values=tuple(tuple(row) for row in b)),
        DenseMatrix(rows=r, cols=n, values=tuple(tuple(row) for row in c)),
    )
