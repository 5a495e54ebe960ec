from .certificates import GrowingSuffixCert, SplittableCert
from .constants import AlgorithmConstants, load_constants
from .instances import FAR_STYLES, FREE_STYLES, CertifiedInstance, InstanceSpec
from .intervals import IndexInterval, ValueRange
from .patterns import DisjointFamily, PatternWitness, RunOutcome
from .reports import (
    BenchConfig,
    LogFit,
    ScalingConfig,
    ScalingReport,
    ScalingRow,
    SuccessEstimate,
    SummaryRow,
    TrialRecord,
)

__all__ = [
    "AlgorithmConstants",
    "BenchConfig",
    "CertifiedInstance",
    "DisjointFamily",
    "FAR_STYLES",
    "FREE_STYLES",
    "GrowingSuffixCert",
    "IndexInterval",
    "InstanceSpec",
    "LogFit",
    "PatternWitness",
    "RunOutcome",
    "ScalingConfig",
    "ScalingReport",
    "ScalingRow",
    "SplittableCert",
    "SuccessEstimate",
    "SummaryRow",
    "TrialRecord",
    "ValueRange",
    "load_constants",
]
