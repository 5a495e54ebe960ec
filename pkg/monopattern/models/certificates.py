"""Certificates for the two structural settings: growing suffixes and
splittable intervals. They serialize to JSON for fixture-based tests."""

from typing import List

from pydantic import BaseModel, Field

from .intervals import IndexInterval
from .patterns import DisjointFamily


class GrowingSuffixCert(BaseModel):
    """An index `start` together with one hit set per dyadic scale.

    `scale_sets[t-1]` is D_t, which must lie inside the t-th scale S_t(start).
    """

    start: int = Field(ge=0)
    scale_sets: List[List[int]]
    alpha: float = Field(ge=0, le=1)
    beta: float = Field(ge=0)

    model_config = {"extra": "forbid"}


class SplittableCert(BaseModel):
    """An interval, disjoint k-patterns inside it and an L/M/R split at c."""

    interval: IndexInterval
    tuples: DisjointFamily
    split_index: int = Field(ge=1)
    left: IndexInterval
    middle: IndexInterval
    right: IndexInterval
    alpha: float = Field(gt=0, le=1)
    beta: float = Field(gt=0, le=1)

    model_config = {"extra": "forbid"}
