"""
Certificate JSON: conversion between RankCertificate and its wire schema.
"""

from pydantic import ValidationError as SchemaValidationError

from rankkit.domain.matrices.exceptions import InvalidRationalError
from rankkit.domain.reports.exceptions import ParseError
from rankkit.domain.reports.schemas import CertificateOut, RunReport, StatsOut, SummandOut
from rankkit.domain.semirings.models import RankCertificate, RankOneSummand, RunStats, SemiringKind
from rankkit.service_layer.matrices.services import format_rational, parse_rational


def certificate_to_schema(certificate: RankCertificate) -> CertificateOut:
    return CertificateOut(
        semiring=certificate.kind.value,
        summands=[
            SummandOut(
                rows=list(summand.rows),
                cols=list(summand.cols),
                u=[format_rational(x) for x in summand.u],
                v=[format_rational(x) for x in summand.v],
            )
            for summand in certificate.summands
        ],
    )


def certificate_from_schema(schema: CertificateOut) -> RankCertificate:
    try:
        kind = SemiringKind(schema.semiring)
    except ValueError as exc:
        raise ParseError(f"Unknown semiring {schema.semiring!r}") from exc
    try:
        summands = tuple(
            RankOneSummand(
                rows=tuple(s.rows),
                cols=tuple(s.cols),
                u=tuple(parse_rational(x) for x in s.u),
                v=tuple(parse_rational(x) for x in s.v),
            )
            for s in schema.summands
        )
    except InvalidRationalError as exc:
        raise ParseError(exc.message) from exc
    return RankCertificate(kind=kind, summands=summands)


def load_certificate(text: str) -> RankCertificate:
    """Read a certificate from JSON text: a bare certificate or a run report carrying one."""
    try:
        schema = CertificateOut.model_validate_json(text)
    except SchemaValidationError as exc:
        try:
            report = RunReport.model_validate_json(text)
        except SchemaValidationError:
            raise ParseError(f"Invalid certificate JSON: {exc.error_count()} error(s)") from exc
        if report.certificate is None:
            raise ParseError("Run report carries no certificate") from exc
        schema = report.certificate
    return certificate_from_schema(schema)


def stats_to_schema(stats: RunStats) -> StatsOut:
    return StatsOut(
        sets_enumerated=stats.sets_enumerated,
        dp_states=stats.dp_states,
        arithmetic_ops=stats.arithmetic_ops,
        wall_ms=round(stats.wall_ms, 3),
    )
