import logging
from collections.abc import Callable
from pathlib import Path

import pytest

from rankkit.adapters.bmx import emit_bmx
from rankkit.config.settings import RankkitSettings, get_settings
from rankkit.domain.matrices.models import BandMatrix
from rankkit.main import run
from tests.factories import CertificateOutFactory, RunReportFactory
from tests.helpers import band, identity

logger = logging.getLogger(__name__)


# ============================================================================
# Matrix Fixtures
# ============================================================================


@pytest.fixture
def all_ones_2() -> BandMatrix:
    return band([[1, 1], [1, 1]], k=1)


@pytest.fixture
def crossed_2() -> BandMatrix:
    """[[2,1],[1,2]]: rank-one nowhere, two L-shaped admissible sets."""
    return band([[2, 1], [1, 2]], k=1)


@pytest.fixture
def tridiagonal_3() -> BandMatrix:
    """[[1,1,0],[1,1,1],[0,0,1]]: one deficient 2-block joined to a 1-block."""
    return band([[1, 1, 0], [1, 1, 1], [0, 0, 1]], k=1)


@pytest.fixture
def identity_3() -> BandMatrix:
    return identity(3)


@pytest.fixture
def zero_3() -> BandMatrix:
    return BandMatrix(n=3, k=1)


# ============================================================================
# Settings Fixtures
# ============================================================================


@pytest.fixture
def settings() -> RankkitSettings:
    return get_settings()


# ============================================================================
# Factory Fixtures
# ============================================================================


@pytest.fixture
def certificate_factory() -> CertificateOutFactory:
    """Factory for serialized certificates."""
    return CertificateOutFactory()


@pytest.fixture
def run_report_factory() -> RunReportFactory:
    """Factory for RunReport models."""
    return RunReportFactory()


# ============================================================================
# CLI Fixtures
# ============================================================================


@pytest.fixture
def write_bmx(tmp_path: Path) -> Callable[[BandMatrix, str], Path]:
    """Write a matrix to a BMX file under tmp_path and return its path."""

    def _write(matrix: BandMatrix, name: str = "matrix.bmx") -> Path:
        path = tmp_path / name
        path.write_text(emit_bmx(matrix), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, str, str]]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = run(list(argv))
        captured = capsys.readouterr()
        logger.debug("rankkit %s -> %d", " ".join(argv), code)
        return code, captured.out, captured.err

    return _run
