from fractions import Fraction

from polyfactory.factories.pydantic_factory import ModelFactory

from rankkit.domain.reports.schemas import CertificateOut, RunReport, StatsOut, SummandOut
from tests.factory_base import fake


def _rational() -> str:
    return str(Fraction(fake.random_int(min=1, max=9), fake.random_int(min=1, max=4)))


class SummandOutFactory(ModelFactory[SummandOut]):
    __model__ = SummandOut

    @classmethod
    def rows(cls) -> list[int]:
        start = fake.random_int(min=1, max=5)
        return [start, start + 1]

    @classmethod
    def cols(cls) -> list[int]:
        start = fake.random_int(min=1, max=5)
        return [start]

    @classmethod
    def u(cls) -> list[str]:
        return [_rational(), _rational()]

    @classmethod
    def v(cls) -> list[str]:
        return [_rational()]


class CertificateOutFactory(ModelFactory[CertificateOut]):
    __model__ = CertificateOut

    semiring: str = "nonneg"

    @classmethod
    def summands(cls) -> list[SummandOut]:
        return SummandOutFactory.batch(size=fake.random_int(min=1, max=3))


class StatsOutFactory(ModelFactory[StatsOut]):
    __model__ = StatsOut

    @classmethod
    def wall_ms(cls) -> float:
        return round(fake.pyfloat(min_value=0, max_value=50), 3)


class RunReportFactory(ModelFactory[RunReport]):
    __model__ = RunReport

    semiring: str = "tropical"
    certificate = None
    oracle_rank = None

    @classmethod
    def n(cls) -> int:
        return fake.random_int(min=1, max=8)

    @classmethod
    def k(cls) -> int:
        return fake.random_int(min=0, max=2)

    @classmethod
    def rank(cls) -> int:
        return fake.random_int(min=0, max=8)

    @classmethod
    def stats(cls) -> StatsOut:
        return StatsOutFactory.build()
