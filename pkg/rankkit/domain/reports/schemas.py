"""
Wire schemas for run reports and certificates.

Rationals travel as exact strings (``"3/2"``), never as floats.
"""

from pydantic import BaseModel, ConfigDict, Field


class SummandOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rows: list[int]
    cols: list[int]
    u: list[str]
    v: list[str]


class CertificateOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    semiring: str
    summands: list[SummandOut] = Field(default_factory=list)


class StatsOut(BaseModel):
    sets_enumerated: int = 0
    dp_states: int = 0
    arithmetic_ops: int = 0
    wall_ms: float = 0.0


class RunReport(BaseModel):
    semiring: str
    n: int
    k: int
    rank: int
    certificate: CertificateOut | None = None
    stats: StatsOut = Field(default_factory=StatsOut)
    oracle_rank: int | None = None


class VerifyReport(BaseModel):
    semiring: str
    n: int
    summands: int
    valid: bool
