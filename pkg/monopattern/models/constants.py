"""Tunable constants of the tester.

The analysis only asks for "large enough" constants and a polynomial P of
"large enough" degree; every such choice lives here so that runs are fully
described by (input, seed, parameters, constants).
"""

import json
import math
from functools import lru_cache
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

from .. import config
from ..errors import UnsupportedFormat

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


class AlgorithmConstants(BaseModel):
    """Iteration multipliers, the polynomial P and the n-independent caps."""

    c1: float = Field(default=config.DEFAULT_C1, gt=0)
    c2: float = Field(default=config.DEFAULT_C2, gt=0)
    p_degree: int = Field(default=config.DEFAULT_P_DEGREE, ge=0)
    p_shift: float = Field(default=config.DEFAULT_P_SHIFT, ge=0)
    suffix_scale_multiplier: float = Field(default=config.DEFAULT_SUFFIX_SCALE_MULTIPLIER, gt=0)
    suffix_rep_multiplier: float = Field(default=config.DEFAULT_SUFFIX_REP_MULTIPLIER, gt=0)
    # "proof": eps / (c2 * k^5); "figure": eps / c2.
    split_eps_rule: Literal["proof", "figure"] = "proof"
    max_iterations: Optional[int] = Field(default=config.DEFAULT_MAX_ITERATIONS, ge=1)
    max_suffix_repetitions: Optional[int] = Field(
        default=config.DEFAULT_MAX_SUFFIX_REPETITIONS, ge=1
    )
    max_scale_samples: Optional[int] = Field(default=config.DEFAULT_MAX_SCALE_SAMPLES, ge=1)
    max_density_guesses: Optional[int] = Field(default=config.DEFAULT_MAX_DENSITY_GUESSES, ge=1)
    max_base_samples: Optional[int] = Field(default=config.DEFAULT_MAX_BASE_SAMPLES, ge=1)
    max_fitting_windows: Optional[int] = Field(default=config.DEFAULT_MAX_FITTING_WINDOWS, ge=1)
    # Nested searches run with every cap shifted right by cap_decay * depth.
    cap_decay: int = Field(default=config.DEFAULT_CAP_DECAY, ge=0)

    model_config = {"extra": "forbid", "frozen": True}

    @classmethod
    def uncapped(cls, **overrides) -> "AlgorithmConstants":
        """Constants with every cap disabled; loop counts follow the formulas."""
        caps = dict(
            max_iterations=None,
            max_suffix_repetitions=None,
            max_scale_samples=None,
            max_density_guesses=None,
            max_base_samples=None,
            max_fitting_windows=None,
        )
        caps.update(overrides)
        return cls(**caps)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "AlgorithmConstants":
        path = Path(path)
        suffix = path.suffix.lower()
        if suffix == ".toml":
            data = tomllib.loads(path.read_text(encoding="utf-8"))
        elif suffix == ".json":
            data = json.loads(path.read_text(encoding="utf-8"))
        else:
            raise UnsupportedFormat(
                f"constants file must be .toml or .json, got {path.name}",
                code="constants_format",
            )
        # A TOML file may nest everything under [constants].
        if isinstance(data, dict) and isinstance(data.get("constants"), dict):
            data = data["constants"]
        return cls.model_validate(data)

    def at_depth(self, depth: int) -> "AlgorithmConstants":
        """Constants for a search nested inside `depth` enclosing searches.

        The iteration, suffix-repetition and fitting-window caps shrink by
        2 ** (cap_decay * depth), never below 1. Disabled caps stay disabled.
        """
        if depth <= 0 or self.cap_decay == 0:
            return self
        return _at_depth(self, depth)

    def fitting_scales(self, k: int, eps: float, t_star: int) -> range:
        """Scales the fitting branch visits, from t* downwards."""
        first = max(0, t_star - self.fitting_span(k, eps))
        scales = range(t_star, first - 1, -1)
        if self.max_fitting_windows is not None:
            scales = scales[: self.max_fitting_windows]
        return scales

    def p(self, k: int, eps: float) -> float:
        """p = P(k log(1/eps)), never below 1."""
        return max(1.0, (k * math.log2(1.0 / eps) + self.p_shift) ** self.p_degree)

    def spacing(self, k: int, eps: float) -> float:
        """The overshoot spacing factor l = 4p / eps."""
        return 4.0 * self.p(k, eps) / eps

    def fitting_span(self, k: int, eps: float) -> int:
        """How many scales below t* the fitting branch revisits: ceil(3k log2 l)."""
        return math.ceil(3 * k * math.log2(self.spacing(k, eps)))

    def split_eps(self, k: int, eps: float) -> float:
        if self.split_eps_rule == "proof":
            return eps / (self.c2 * k**5)
        return eps / self.c2

    def main_iterations(self, k: int, eps: float, delta: float) -> int:
        raw = self.c1 * math.log(1.0 / delta) * self.p(k, eps) * k**5 / eps**2
        return _capped(raw, self.max_iterations)

    def base_case_samples(self, eps: float, delta: float) -> int:
        """Positions sampled when looking for a single unmasked value."""
        return _capped(math.log(1.0 / delta) / eps, self.max_base_samples)

    def good_split_iterations(self, k: int, eps: float, delta: float, xi: float) -> int:
        raw = self.c1 * k / (eps * xi**2) * math.log(1.0 / delta)
        return _capped(raw, self.max_iterations)

    def suffix_plan(self, eps: float, delta: float) -> List[Tuple[int, int]]:
        """(repetitions, samples per scale) for each density guess 2^-j."""
        guesses = math.ceil(math.log2(1.0 / eps)) + 3
        if self.max_density_guesses is not None:
            guesses = min(guesses, self.max_density_guesses)
        plan = []
        for j in range(guesses):
            density = 2.0**-j
            reps = _capped(
                self.suffix_rep_multiplier * (density / eps) * math.log(3.0 / delta),
                self.max_suffix_repetitions,
            )
            samples = _capped(self.suffix_scale_multiplier / density, self.max_scale_samples)
            plan.append((reps, samples))
        return plan


def load_constants(path: Union[str, Path, None]) -> AlgorithmConstants:
    """Constants from a .toml/.json file, or the defaults when path is None."""
    if path is None:
        return AlgorithmConstants()
    return AlgorithmConstants.from_file(path)


_DECAYING_CAPS = ("max_iterations", "max_suffix_repetitions", "max_fitting_windows")


@lru_cache(maxsize=None)
def _at_depth(constants: AlgorithmConstants, depth: int) -> AlgorithmConstants:
    shift = constants.cap_decay * depth
    update = {}
    for name in _DECAYING_CAPS:
        cap = getattr(constants, name)
        if cap is not None:
            update[name] = max(1, cap >> shift)
    return constants.model_copy(update=update)


def _capped(raw: float, cap: Optional[int]) -> int:
    count = max(1, math.ceil(raw))
    if cap is not None:
        count = min(count, cap)
    return count
