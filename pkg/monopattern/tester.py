"""Adaptive search for length-k increasing patterns.

`find_monotone` combines four randomized procedures:

- Sample-Suffix: dyadic sampling after random start points, which catches
  inputs whose patterns spread over growing suffixes.
- The main loop: sample x, query dyadic scales to the right of x for a larger
  value y, then either recurse inside overshoot intervals between x and y
  (Find-Within-Interval) or around x at nearby scales (Find-Good-Split).
- Find-Within-Interval: recurse on each interval twice, below and at/above
  f(y), and assemble a pattern from the returned pieces.
- Find-Good-Split: sample a split point z and a pivot w, then look for a
  prefix left of z below f(w) and a suffix right of z at or above f(w).

Every procedure only reports patterns it has read, so a Found outcome is
always a real pattern of the view it ran on. Loop counts come from
`AlgorithmConstants`; none of them depends on n, and nested searches run
under caps that shrink with their depth (`AlgorithmConstants.at_depth`).
The only n-dependent loop is over the O(log n) dyadic scales, which
`query_bound` turns into an explicit budget.
"""

import logging
import math
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import config
from .errors import (
    EmptyRestriction,
    InvalidParameter,
    MalformedIntervals,
    QueryBudgetExceeded,
    RecursionDepthExceeded,
)
from .exact import longest_increasing_indices
from .models.constants import AlgorithmConstants
from .models.intervals import IndexInterval, ValueRange
from .models.patterns import PatternWitness, RunOutcome
from .rng import Rng
from .structure import suffix_scales
from .view import SequenceView

logger = logging.getLogger(__name__)

RngLike = Union[Rng, int, None]


def extract_increasing(points: Iterable[Tuple[int, float]], k: int) -> Optional[PatternWitness]:
    """A length-k increasing pattern among (index, value) points, if any."""
    by_index = dict(points)
    ordered = sorted(by_index.items())
    chain = longest_increasing_indices([v for _, v in ordered])
    if k < 1 or len(chain) < k:
        return None
    return PatternWitness.from_points([ordered[j] for j in chain[:k]])


def _check_params(k: int, eps: float, delta: float) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be a positive integer, got {k!r}", code="k_range")
    if not 0 < eps <= 1:
        raise InvalidParameter(f"eps must lie in (0, 1], got {eps}", code="eps_range")
    if not 0 < delta < 1:
        raise InvalidParameter(f"delta must lie in (0, 1), got {delta}", code="delta_range")


def _restricted(
    view: SequenceView, interval: IndexInterval, value_range: Optional[ValueRange] = None
) -> Optional[SequenceView]:
    # A vacuous restriction is an immediate Fail for the caller.
    try:
        return view.restrict(interval, value_range)
    except EmptyRestriction:
        return None


class MonotoneTester:
    """One seeded tester. Reuse across calls continues the same random stream.

    Usage:
        tester = MonotoneTester(AlgorithmConstants(), Rng(7))
        outcome = tester.find_monotone(SequenceView(values), k=3, eps=0.25, delta=0.1)
        if outcome.found:
            print(outcome.witness.indices, outcome.queries)
    """

    def __init__(self, constants: Optional[AlgorithmConstants] = None, rng: RngLike = None) -> None:
        self.constants = constants or AlgorithmConstants()
        if rng is None:
            rng = config.DEFAULT_SEED
        self.rng = rng if isinstance(rng, Rng) else Rng(rng)
        self._sought: List[int] = []

    # -- public operations -------------------------------------------------

    def find_monotone(self, view: SequenceView, k: int, eps: float, delta: float) -> RunOutcome:
        _check_params(k, eps, delta)
        before = view.query_count
        witness = self._find_monotone(view, k, eps, delta)
        outcome = RunOutcome(witness, view.query_count - before)

        bound = query_bound(k, eps, delta, len(view), self.constants)
        if outcome.queries > bound:
            raise QueryBudgetExceeded(
                f"{outcome.queries} queries exceed the bound {bound} for k={k}, n={len(view)}",
                code="query_budget",
            )
        logger.debug(
            "find_monotone k=%d eps=%g delta=%g n=%d seed=%d found=%s queries=%d",
            k, eps, delta, len(view), self.rng.seed, outcome.found, outcome.queries,
        )
        return outcome

    def test_far(self, view: SequenceView, k: int, eps_far: float, delta: float) -> RunOutcome:
        """Tester for inputs eps_far-far from pattern-free.

        Such inputs hold at least eps_far * n / k disjoint patterns, which is
        the density `find_monotone` is promised.
        """
        _check_params(k, eps_far, delta)
        return self.find_monotone(view, k, eps_far / k, delta)

    def sample_suffix(self, view: SequenceView, k: int, eps: float, delta: float) -> RunOutcome:
        _check_params(k, eps, delta)
        before = view.query_count
        witness = self._sample_suffix(view, k, eps, delta, self.constants)
        return RunOutcome(witness, view.query_count - before)

    def find_within_interval(
        self,
        view: SequenceView,
        k: int,
        eps: float,
        delta: float,
        x: int,
        y: int,
        intervals: Sequence[IndexInterval],
    ) -> RunOutcome:
        _check_params(k, eps, delta)
        if k < 2:
            raise InvalidParameter(f"find_within_interval needs k >= 2, got {k}", code="k_range")
        _check_overshoot(view.interval, x, y, intervals, k)

        before = view.query_count
        fx, fy = view.query(x), view.query(y)
        if fx is None or fy is None or not fx < fy:
            raise InvalidParameter(
                f"f(x) < f(y) must hold for unmasked x={x}, y={y}", code="endpoint_order"
            )
        witness = self._find_within_interval(view, k, eps, delta, (x, fx), (y, fy), intervals)
        return RunOutcome(witness, view.query_count - before)

    def find_good_split(
        self, view: SequenceView, k: int, eps: float, delta: float, c: int, xi: float
    ) -> RunOutcome:
        _check_params(k, eps, delta)
        if not 1 <= c <= k - 1:
            raise InvalidParameter(f"split index c={c} must lie in [1, {k - 1}]", code="split_range")
        if not 0 < xi <= 1:
            raise InvalidParameter(f"xi must lie in (0, 1], got {xi}", code="xi_range")
        before = view.query_count
        witness = self._find_good_split(view, k, eps, delta, c, xi)
        return RunOutcome(witness, view.query_count - before)

    # -- internals -----------------------------------------------------------

    def _find_monotone(
        self, view: SequenceView, k: int, eps: float, delta: float
    ) -> Optional[PatternWitness]:
        if self._sought and k >= self._sought[-1]:
            raise RecursionDepthExceeded(
                f"recursive search for length {k} inside a search for length {self._sought[-1]}",
                code="depth_guard",
            )
        if len(view) < k:
            return None
        consts = self.constants.at_depth(len(self._sought))
        self._sought.append(k)
        try:
            if k == 1:
                return self._find_one(view, eps, delta, consts)
            p = consts.p(k, eps)
            witness = self._sample_suffix(view, k, eps / p, delta, consts)
            if witness is not None:
                return witness
            for _ in range(consts.main_iterations(k, eps, delta)):
                witness = self._main_iteration(view, k, eps, delta, p, consts)
                if witness is not None:
                    return witness
            return None
        finally:
            self._sought.pop()

    def _find_one(
        self, view: SequenceView, eps: float, delta: float, consts: AlgorithmConstants
    ) -> Optional[PatternWitness]:
        lo, hi = view.interval.lo, view.interval.hi
        for _ in range(consts.base_case_samples(eps, delta)):
            i = self.rng.randint(lo, hi)
            value = view.query(i)
            if value is not None:
                return PatternWitness((i,), (value,))
        return None

    def _main_iteration(
        self,
        view: SequenceView,
        k: int,
        eps: float,
        delta: float,
        p: float,
        consts: AlgorithmConstants,
    ) -> Optional[PatternWitness]:
        lo, hi = view.interval.lo, view.interval.hi
        x = self.rng.randint(lo, hi)
        fx = view.query(x)
        if fx is None:
            return None

        # Probe one position per dyadic scale right of x; keep the rightmost
        # larger value, later scales winning ties.
        best: Optional[Tuple[int, float, int]] = None
        for t in range(1, (len(view) - 1).bit_length() + 1):
            a = x + math.ceil((1 << t) / (12 * k))
            b = min(x + (1 << t), hi)
            if a > b:
                continue
            y_t = self.rng.randint(a, b)
            value = view.query(y_t)
            if value is not None and value > fx and (best is None or y_t >= best[0]):
                best = (y_t, value, t)
        if best is None:
            return None
        y, fy, t_star = best
        if k == 2:
            return PatternWitness((x, y), (fx, fy))

        intervals = self._overshoot_intervals(k, eps, p, x, y, t_star, consts)
        if intervals is not None:
            witness = self._find_within_interval(
                view, k, eps / (2 * p), delta / 2, (x, fx), (y, fy), intervals
            )
            if witness is not None:
                return witness

        # Fitting: windows around x at t* and the scales just below it.
        split_eps = consts.split_eps(k, eps)
        for t in consts.fitting_scales(k, eps, t_star):
            window = IndexInterval.clipped(x - (1 << t), x + (1 << t), view.interval)
            if window is None or len(window) < k:
                continue
            sub = view.restrict(window)
            for c0 in range(1, k):
                witness = self._find_good_split(sub, k, split_eps, delta / 2, c0, config.FITTING_XI)
                if witness is not None:
                    return witness
        return None

    def _overshoot_intervals(
        self,
        k: int,
        eps: float,
        p: float,
        x: int,
        y: int,
        t_star: int,
        consts: AlgorithmConstants,
    ) -> Optional[List[IndexInterval]]:
        """J_1..J_{k-2}, geometrically spaced by 4p/eps towards x + 2^t*/(12k).

        None when any of them is empty at this scale.
        """
        spacing = consts.spacing(k, eps)
        base = (1 << t_star) / (12 * k)
        intervals = []
        for i in range(1, k - 1):
            start = max(x + 1, math.ceil(x + base * spacing ** -(k - 1 - i)))
            end = min(y - 1, math.ceil(x + base * spacing ** -(k - 2 - i)) - 1)
            if start > end:
                return None
            intervals.append(IndexInterval(start, end))
        return intervals

    def _find_within_interval(
        self,
        view: SequenceView,
        k: int,
        eps: float,
        delta: float,
        x: Tuple[int, float],
        y: Tuple[int, float],
        intervals: Sequence[IndexInterval],
    ) -> Optional[PatternWitness]:
        fy = y[1]
        points = [x, y]
        witness = extract_increasing(points, k)
        if witness is not None:
            return witness
        for kappa, interval in enumerate(intervals, start=1):
            below = _restricted(view, interval, ValueRange.below(fy))
            if below is not None:
                found = self._find_monotone(below, kappa + 1, eps / 2, delta / (2 * k))
                if found is not None:
                    points.extend(found.points())
            above = _restricted(view, interval, ValueRange.at_least(fy))
            if above is not None:
                found = self._find_monotone(above, k - kappa, eps / 2, delta / (2 * k))
                if found is not None:
                    points.extend(found.points())
            witness = extract_increasing(points, k)
            if witness is not None:
                return witness
        return None

    def _find_good_split(
        self, view: SequenceView, k: int, eps: float, delta: float, c: int, xi: float
    ) -> Optional[PatternWitness]:
        lo, hi = view.interval.lo, view.interval.hi
        consts = self.constants.at_depth(len(self._sought))
        sub_eps, sub_delta = eps * xi / 3, delta / 3
        for _ in range(consts.good_split_iterations(k, eps, delta, xi)):
            w = self.rng.randint(lo, hi)
            fw = view.query(w)
            z = self.rng.randint(lo, hi)
            if fw is None or z == lo:
                continue
            left = _restricted(view, IndexInterval(lo, z - 1), ValueRange.below(fw))
            if left is None:
                continue
            prefix = self._find_monotone(left, c, sub_eps, sub_delta)
            if prefix is None:
                continue
            right = _restricted(view, IndexInterval(z, hi), ValueRange.at_least(fw))
            if right is None:
                continue
            suffix = self._find_monotone(right, k - c, sub_eps, sub_delta)
            if suffix is not None:
                return prefix.concat(suffix)
        return None

    def _sample_suffix(
        self, view: SequenceView, k: int, eps: float, delta: float, consts: AlgorithmConstants
    ) -> Optional[PatternWitness]:
        lo, hi = view.interval.lo, view.interval.hi
        if lo == hi:
            return None
        for repetitions, per_scale in consts.suffix_plan(eps, delta):
            for _ in range(repetitions):
                start = self.rng.randint(lo, hi)
                if start == hi:
                    continue
                points = []
                for scale in suffix_scales(start, hi + 1):
                    for i in self.rng.sample_range(scale.lo, scale.hi, per_scale):
                        value = view.query(i)
                        if value is not None:
                            points.append((i, value))
                witness = extract_increasing(points, k)
                if witness is not None:
                    return witness
        return None


def _check_overshoot(
    whole: IndexInterval, x: int, y: int, intervals: Sequence[IndexInterval], k: int
) -> None:
    if not (whole.lo <= x < y <= whole.hi):
        raise MalformedIntervals(f"need x < y inside the view, got x={x}, y={y}")
    if len(intervals) != k - 2:
        raise MalformedIntervals(f"expected {k - 2} intervals, got {len(intervals)}")
    previous_end = x
    for interval in intervals:
        if interval.lo <= previous_end or interval.hi >= y:
            raise MalformedIntervals(
                f"[{interval.lo}, {interval.hi}] is out of order or not strictly between {x} and {y}"
            )
        previous_end = interval.hi


# -- module-level entry points ---------------------------------------------


def find_monotone(
    view: SequenceView,
    k: int,
    eps: float,
    delta: float,
    constants: Optional[AlgorithmConstants] = None,
    rng: RngLike = None,
) -> RunOutcome:
    return MonotoneTester(constants, rng).find_monotone(view, k, eps, delta)


def test_far(
    view: SequenceView,
    k: int,
    eps_far: float,
    delta: float,
    constants: Optional[AlgorithmConstants] = None,
    rng: RngLike = None,
) -> RunOutcome:
    return MonotoneTester(constants, rng).test_far(view, k, eps_far, delta)


# pytest would otherwise collect the module-level function as a test.
test_far.__test__ = False


def sample_suffix(
    view: SequenceView,
    k: int,
    eps: float,
    delta: float,
    constants: Optional[AlgorithmConstants] = None,
    rng: RngLike = None,
) -> RunOutcome:
    return MonotoneTester(constants, rng).sample_suffix(view, k, eps, delta)


def find_within_interval(
    view: SequenceView,
    k: int,
    eps: float,
    delta: float,
    x: int,
    y: int,
    intervals: Sequence[IndexInterval],
    constants: Optional[AlgorithmConstants] = None,
    rng: RngLike = None,
) -> RunOutcome:
    return MonotoneTester(constants, rng).find_within_interval(view, k, eps, delta, x, y, intervals)


def find_good_split(
    view: SequenceView,
    k: int,
    eps: float,
    delta: float,
    c: int,
    xi: float,
    constants: Optional[AlgorithmConstants] = None,
    rng: RngLike = None,
) -> RunOutcome:
    return MonotoneTester(constants, rng).find_good_split(view, k, eps, delta, c, xi)


# -- analytic query budget ---------------------------------------------------


def query_bound(
    k: int, eps: float, delta: float, size: int, constants: Optional[AlgorithmConstants] = None
) -> int:
    """Worst-case queries of `find_monotone` on a view of `size` positions.

    Mirrors every loop of the search with sub-views bounded by `size`, each
    nested search under its depth-scaled caps. For fixed (k, eps, delta,
    constants) it is O(log2 size); for k = 2 each doubling of `size` adds
    the same amount once the scales outgrow the per-scale sample caps.
    """
    return _monotone_bound(k, eps, delta, size, constants or AlgorithmConstants(), 0)


def _scale_count(size: int) -> int:
    return max(0, size - 1).bit_length()


@lru_cache(maxsize=None)
def _monotone_bound(
    k: int, eps: float, delta: float, size: int, constants: AlgorithmConstants, depth: int
) -> int:
    if size < k:
        return 0
    consts = constants.at_depth(depth)
    if k == 1:
        return consts.base_case_samples(eps, delta)

    p = consts.p(k, eps)
    scales = _scale_count(size)
    per_iteration = 1 + scales
    if k >= 3:
        fwi_eps, fwi_delta = eps / (2 * p) / 2, delta / 2 / (2 * k)
        per_iteration += sum(
            _monotone_bound(kappa + 1, fwi_eps, fwi_delta, size, constants, depth + 1)
            + _monotone_bound(k - kappa, fwi_eps, fwi_delta, size, constants, depth + 1)
            for kappa in range(1, k - 1)
        )
        # t* never exceeds the scale count, and fewer scales never mean more windows.
        windows = len(consts.fitting_scales(k, eps, scales))
        split_eps = consts.split_eps(k, eps)
        per_iteration += windows * sum(
            _split_bound(k, split_eps, delta / 2, c0, config.FITTING_XI, size, constants, depth + 1)
            for c0 in range(1, k)
        )
    return _suffix_bound(eps / p, delta, size, consts) + consts.main_iterations(k, eps, delta) * per_iteration


def _split_bound(
    k: int,
    eps: float,
    delta: float,
    c: int,
    xi: float,
    size: int,
    constants: AlgorithmConstants,
    depth: int,
) -> int:
    sub_eps, sub_delta = eps * xi / 3, delta / 3
    per_iteration = (
        1
        + _monotone_bound(c, sub_eps, sub_delta, size, constants, depth)
        + _monotone_bound(k - c, sub_eps, sub_delta, size, constants, depth)
    )
    return constants.at_depth(depth).good_split_iterations(k, eps, delta, xi) * per_iteration


def _suffix_bound(eps: float, delta: float, size: int, consts: AlgorithmConstants) -> int:
    # The first start of the interval has the most scales; scale t holds at most 2^(t-1) positions.
    scales = _scale_count(size)
    return sum(
        repetitions * sum(min(per_scale, 1 << (t - 1)) for t in range(1, scales + 1))
        for repetitions, per_scale in consts.suffix_plan(eps, delta)
    )
