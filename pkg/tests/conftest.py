"""Shared test fixtures for the monopattern test suite."""

from itertools import combinations

import pytest

from monopattern.exact import lis_length
from monopattern.generators import gen_instance
from monopattern.models.constants import AlgorithmConstants
from monopattern.models.instances import InstanceSpec
from monopattern.view import SequenceView


# ---------------------------------------------------------------------------
# Factories
# ---------------------------------------------------------------------------

def make_view(values, interval=None, value_range=None):
    return SequenceView(values, interval, value_range)


def make_instance(style="blocks", n=64, k=3, eps=0.25, seed=0):
    far = style in ("blocks", "staircase", "splittable", "suffix")
    return gen_instance(InstanceSpec(style=style, n=n, k=k, eps=eps if far else None, seed=seed))


def make_tiny_constants(**overrides):
    """Constants with every loop capped at one or two rounds.

    Searches on pattern-free inputs explore every branch, so tests that run
    many of them keep the recursion this small.
    """
    caps = dict(
        max_iterations=2,
        max_suffix_repetitions=2,
        max_scale_samples=2,
        max_density_guesses=2,
        max_base_samples=4,
    )
    caps.update(overrides)
    return AlgorithmConstants(**caps)


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------

def brute_lis(seq):
    for size in range(len(seq), 0, -1):
        for idx in combinations(range(len(seq)), size):
            if all(seq[a] < seq[b] for a, b in zip(idx, idx[1:])):
                return size
    return 0


def brute_distance(seq, k):
    """Minimum deletions leaving no increasing subsequence of length k."""
    n = len(seq)
    for keep in range(n, -1, -1):
        for idx in combinations(range(n), keep):
            if lis_length([seq[i] for i in idx]) < k:
                return n - keep
    return n


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def tiny_constants():
    return make_tiny_constants()


@pytest.fixture
def example_values():
    return [5.0, 1.0, 6.0, 2.0, 7.0, 3.0]


@pytest.fixture
def identity_1024():
    return tuple(float(i) for i in range(1024))


@pytest.fixture
def blocks_instance():
    return make_instance("blocks", n=4096, k=3, eps=0.25)
