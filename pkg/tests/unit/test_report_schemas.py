"""Unit tests for the JSON report schemas."""

import json

import pytest
from pydantic import ValidationError

from rankkit.domain.reports.schemas import CertificateOut, RunReport, VerifyReport


def test_run_report_serializes_without_certificate(run_report_factory):
    report = run_report_factory.build()
    payload = json.loads(report.model_dump_json())
    assert payload["certificate"] is None
    assert payload["oracle_rank"] is None
    assert set(payload["stats"]) == {"sets_enumerated", "dp_states", "arithmetic_ops", "wall_ms"}


def test_run_report_parses_its_own_json(run_report_factory, certificate_factory):
    """
    GIVEN a run report with a certificate
    WHEN its JSON is validated again
    THEN the same report comes back.
    """
    report = run_report_factory.build(certificate=certificate_factory.build(), oracle_rank=2)
    assert RunReport.model_validate_json(report.model_dump_json()) == report


def test_certificate_rejects_unknown_fields():
    with pytest.raises(ValidationError):
        CertificateOut.model_validate({"semiring": "fuzzy", "summands": [], "rank": 1})


def test_summand_rejects_unknown_fields():
    with pytest.raises(ValidationError):
        CertificateOut.model_validate(
            {
                "semiring": "fuzzy",
                "summands": [{"rows": [1], "cols": [1], "u": [], "v": [], "w": []}],
            }
        )


def test_verify_report_fields():
    report = VerifyReport(semiring="boolean", n=3, summands=2, valid=True)
    assert json.loads(report.model_dump_json()) == {
        "semiring": "boolean",
        "n": 3,
        "summands": 2,
        "valid": True,
    }
