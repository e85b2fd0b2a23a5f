"""`rankkit rank`: factorization rank of a BMX matrix."""

import argparse
import logging
from pathlib import Path

from rankkit.adapters.bmx import read_bmx
from rankkit.adapters.certificates import certificate_to_schema, stats_to_schema
from rankkit.config.settings import RankkitSettings
from rankkit.domain.cover.exceptions import OracleMismatchError
from rankkit.domain.matrices.models import BandMatrix
from rankkit.domain.reports.schemas import RunReport
from rankkit.domain.semirings.models import RankResult, SemiringKind
from rankkit.domain.tridiagonal.exceptions import UnsupportedBandwidthError
from rankkit.service_layer.cover.services import band_rank, brute_force_band_rank
from rankkit.service_layer.tridiagonal.oracle import pattern_oracle_nnr
from rankkit.service_layer.tridiagonal.services import nnr_tridiagonal
from rankkit.shared import SEMIRING_TAGS
from rankkit.shared.exceptions import EXIT_OK

logger = logging.getLogger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("rank", help="compute the factorization rank of a matrix")
    parser.add_argument("--semiring", required=True, choices=SEMIRING_TAGS)
    parser.add_argument("--input", required=True, metavar="PATH", help="BMX matrix file")
    parser.add_argument(
        "--certificate", action="store_true", help="include the rank-one summands"
    )
    parser.add_argument(
        "--oracle", action="store_true", help="cross-check against the exhaustive oracle"
    )
    parser.add_argument("--json", action="store_true", dest="as_json", help="print a JSON report")
    parser.add_argument(
        "--oracle-max-n",
        type=int,
        dest="oracle_max_n",
        metavar="N",
        help="largest dimension the oracle accepts",
    )
    parser.set_defaults(handler=handle)


def _require_tridiagonal_band(matrix: BandMatrix) -> None:
    if matrix.k >= 2:
        raise UnsupportedBandwidthError(
            f"Nonnegative rank is only available for k <= 1 (got k={matrix.k}); "
            "the nonnegative rank of k-band matrices with k >= 2 is an open problem"
        )


def compute_rank(matrix: BandMatrix, kind: SemiringKind) -> RankResult:
    if not kind.is_max_based:
        _require_tridiagonal_band(matrix)
        return nnr_tridiagonal(matrix)
    return band_rank(matrix, kind)


def oracle_rank(matrix: BandMatrix, kind: SemiringKind, max_dimension: int) -> int:
    if not kind.is_max_based:
        return pattern_oracle_nnr(matrix, max_dimension)
    return brute_force_band_rank(matrix, kind, max_dimension)


def build_report(
    matrix: BandMatrix,
    result: RankResult,
    with_certificate: bool,
    oracle: int | None = None,
) -> RunReport:
    return RunReport(
        semiring=result.kind.value,
        n=matrix.n,
        k=matrix.k,
        rank=result.rank,
        certificate=certificate_to_schema(result.certificate) if with_certificate else None,
        stats=stats_to_schema(result.stats),
        oracle_rank=oracle,
    )


def summary_line(report: RunReport) -> str:
    line = f"{report.semiring} rank {report.rank} (n={report.n}, k={report.k})"
    if report.oracle_rank is not None:
        line += f", oracle {report.oracle_rank}"
    return line


def handle(args: argparse.Namespace, settings: RankkitSettings) -> int:
    matrix = read_bmx(Path(args.input))
    kind = SemiringKind(args.semiring)
    result = compute_rank(matrix, kind)

    oracle = None
    if args.oracle:
        oracle = oracle_rank(matrix, kind, settings.oracle_max_dimension)
        logger.info("Oracle %s rank of n=%d: %d", kind.value, matrix.n, oracle)

    report = build_report(matrix, result, args.certificate, oracle)
    if args.as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(summary_line(report))
        if report.certificate is not None:
            print(report.certificate.model_dump_json(indent=2))

    if oracle is not None and oracle != result.rank:
        raise OracleMismatchError(
            f"{kind.value} rank {result.rank} disagrees with oracle rank {oracle}"
        )
    return EXIT_OK
