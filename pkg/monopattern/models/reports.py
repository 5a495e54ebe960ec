"""Measurement records of the harness."""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from .constants import AlgorithmConstants
from .instances import InstanceSpec, Style


class TrialRecord(BaseModel):
    seed: int
    n: int
    k: int
    eps: float
    delta: float
    style: Style
    found: bool
    witness: Optional[List[int]] = None
    queries: int = Field(ge=0)
    wall_time: float = Field(ge=0)

    model_config = {"extra": "forbid"}


class SuccessEstimate(BaseModel):
    rate: float
    trials: int
    records: List[TrialRecord]

    @property
    def mean_queries(self) -> float:
        return sum(r.queries for r in self.records) / len(self.records)

    @property
    def max_queries(self) -> int:
        return max(r.queries for r in self.records)


class ScalingRow(BaseModel):
    n: int
    mean_queries: float
    max_queries: int
    trials: int = Field(ge=1)


class LogFit(BaseModel):
    """mean_queries ~ a + b * log2(n)."""

    a: float
    b: float
    r2: float


class ScalingReport(BaseModel):
    rows: List[ScalingRow]
    fit: LogFit

    @field_validator("rows")
    @classmethod
    def _sorted_by_n(cls, rows: List[ScalingRow]) -> List[ScalingRow]:
        return sorted(rows, key=lambda r: r.n)


class SummaryRow(BaseModel):
    """One line of the CSV summary; field order is the column order."""

    n: int
    k: int
    eps: float
    delta: float
    style: Style
    trials: int
    success_rate: float
    mean_queries: float
    max_queries: int


class BenchConfig(BaseModel):
    """An instance, tester parameters and a trial plan."""

    instance: InstanceSpec
    eps: float = Field(gt=0, lt=1)
    delta: float = Field(gt=0, lt=1)
    trials: int = Field(ge=1)
    base_seed: int = 0
    constants: AlgorithmConstants = Field(default_factory=AlgorithmConstants)
    workers: int = Field(default=1, ge=1)

    model_config = {"extra": "forbid"}


class ScalingConfig(BaseModel):
    ns: List[int]
    style: Style = "blocks"
    k: int = Field(ge=1)
    eps: float = Field(gt=0, lt=1)
    delta: float = Field(gt=0, lt=1)
    trials: int = Field(ge=1)
    base_seed: int = 0
    instance_seed: int = 0
    constants: AlgorithmConstants = Field(default_factory=AlgorithmConstants)
    workers: int = Field(default=1, ge=1)

    model_config = {"extra": "forbid"}
