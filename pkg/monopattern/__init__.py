from .errors import MonopatternError
from .exact import (
    distance_to_free,
    find_pattern_exact,
    greedy_disjoint_family,
    is_far,
    lis_length,
    verify_witness,
)
from .generators import gen_far_instance, gen_free_instance, gen_instance
from .harness import estimate_success, fit_log_slope, scaling_experiment
from .models.constants import AlgorithmConstants, load_constants
from .models.instances import CertifiedInstance, InstanceSpec
from .models.intervals import IndexInterval, ValueRange
from .models.patterns import DisjointFamily, PatternWitness, RunOutcome
from .rng import Rng
from .structure import robustify_intervals, suffix_scales
from .tester import MonotoneTester, find_monotone, query_bound
from .version import __version__
from .view import SequenceView, load_sequence, save_sequence

__all__ = [
    "AlgorithmConstants",
    "CertifiedInstance",
    "DisjointFamily",
    "IndexInterval",
    "InstanceSpec",
    "MonopatternError",
    "MonotoneTester",
    "PatternWitness",
    "Rng",
    "RunOutcome",
    "SequenceView",
    "ValueRange",
    "__version__",
    "distance_to_free",
    "estimate_success",
    "find_monotone",
    "find_pattern_exact",
    "fit_log_slope",
    "gen_far_instance",
    "gen_free_instance",
    "gen_instance",
    "greedy_disjoint_family",
    "is_far",
    "lis_length",
    "load_constants",
    "load_sequence",
    "query_bound",
    "robustify_intervals",
    "save_sequence",
    "scaling_experiment",
    "suffix_scales",
    "verify_witness",
]
