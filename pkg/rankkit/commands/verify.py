"""`rankkit verify`: check a certificate against a matrix."""

import argparse
from pathlib import Path

from rankkit.adapters.bmx import read_bmx
from rankkit.adapters.certificates import load_certificate
from rankkit.config.settings import RankkitSettings
from rankkit.domain.cover.exceptions import CertificateRejectedError
from rankkit.domain.reports.exceptions import ParseError
from rankkit.domain.reports.schemas import VerifyReport
from rankkit.service_layer.semirings.services import check_carrier, verify_certificate
from rankkit.shared.exceptions import EXIT_OK


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("verify", help="verify a rank certificate")
    parser.add_argument("--input", required=True, metavar="PATH", help="BMX matrix file")
    parser.add_argument(
        "--certificate",
        required=True,
        metavar="PATH",
        help="certificate JSON, bare or inside a run report",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, settings: RankkitSettings) -> int:
    matrix = read_bmx(Path(args.input))
    try:
        text = Path(args.certificate).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Cannot read {args.certificate}: {exc.strerror}") from exc
    certificate = load_certificate(text)
    check_carrier(matrix, certificate.kind)

    valid = verify_certificate(matrix, certificate)
    report = VerifyReport(
        semiring=certificate.kind.value,
        n=matrix.n,
        summands=len(certificate),
        valid=valid,
    )
    print(report.model_dump_json(indent=2))
    if not valid:
        raise CertificateRejectedError(
            f"{certificate.kind.value} certificate does not reconstruct the matrix"
        )
    return EXIT_OK
