"""Checkable structure: dyadic suffix scales, growing-suffix and splittable
certificates, and the interval robustification procedure.

Density comparisons are exact. Float parameters such as alpha = 0.2 or
beta = 1/6 are snapped to the nearest small-denominator rational first, so a
ratio that equals its threshold in exact arithmetic also equals it here.
"""

import math
from bisect import bisect_left, bisect_right
from fractions import Fraction
from itertools import accumulate
from typing import List, Optional, Sequence, Set

from . import config
from .errors import DegenerateSuffix, MalformedIntervals, PreconditionMassTooLow
from .exact import verify_witness
from .models.certificates import GrowingSuffixCert, SplittableCert
from .models.intervals import IndexInterval


def _snap(x: float) -> Fraction:
    return Fraction(x).limit_denominator(config.FRACTION_DENOMINATOR_LIMIT)


def suffix_scales(start: int, n: int) -> List[IndexInterval]:
    """The dyadic scales S_1..S_eta of the suffix after `start`, clipped to [0, n-1].

    S_t = [start + 2^(t-1), start + 2^t - 1]; eta is the smallest count whose
    scales cover (start, n-1], so the result partitions that range.
    """
    if start < 0 or start >= n - 1:
        raise DegenerateSuffix(f"no suffix after index {start} in a sequence of length {n}")
    eta = (n - 1 - start).bit_length()
    return [
        IndexInterval(start + (1 << (t - 1)), min(start + (1 << t) - 1, n - 1))
        for t in range(1, eta + 1)
    ]


def check_growing_suffix(seq: Sequence[float], cert: GrowingSuffixCert) -> bool:
    try:
        scales = suffix_scales(cert.start, len(seq))
    except DegenerateSuffix:
        return False
    if len(cert.scale_sets) > len(scales):
        return False
    hit_sets = list(cert.scale_sets) + [[]] * (len(scales) - len(cert.scale_sets))

    alpha, beta = _snap(cert.alpha), _snap(cert.beta)
    total = Fraction(0)
    below = -math.inf
    for scale, hits in zip(scales, hit_sets):
        if len(set(hits)) != len(hits) or any(i not in scale for i in hits):
            return False
        density = Fraction(len(hits), len(scale))
        if density > alpha:
            return False
        total += density
        if hits:
            values = [seq[i] for i in hits]
            # Every hit must exceed every hit of an earlier scale.
            if not min(values) > below:
                return False
            below = max(values)
    return total >= beta


def check_splittable(seq: Sequence[float], cert: SplittableCert) -> bool:
    whole, left, middle, right = cert.interval, cert.left, cert.middle, cert.right
    if whole.hi >= len(seq):
        return False
    if not (
        left.lo == whole.lo
        and middle.lo == left.hi + 1
        and right.lo == middle.hi + 1
        and right.hi == whole.hi
    ):
        return False
    alpha, beta = _snap(cert.alpha), _snap(cert.beta)
    if any(Fraction(len(part), len(whole)) < alpha for part in (left, middle, right)):
        return False

    family = cert.tuples
    if not family.tuples or not family.is_uniform() or not family.is_disjoint():
        return False
    k, c = family.k, cert.split_index
    if not 1 <= c <= k - 1:
        return False
    if Fraction(len(family), len(whole)) < beta:
        return False

    prefix_tops, suffix_bottoms = [], []
    for w in family.tuples:
        if not verify_witness(seq, w, whole):
            return False
        head, tail = w.indices[:c], w.indices[c:]
        if any(i not in left for i in head) or any(j not in right for j in tail):
            return False
        prefix_tops.append(seq[head[-1]])
        suffix_bottoms.append(seq[tail[0]])
    return max(prefix_tops) < min(suffix_bottoms)


def _check_family(whole: IndexInterval, intervals: Sequence[IndexInterval]) -> List[IndexInterval]:
    ordered = sorted(intervals, key=lambda iv: iv.lo)
    for iv in ordered:
        if not iv.is_subset(whole):
            raise MalformedIntervals(f"[{iv.lo}, {iv.hi}] is not inside [{whole.lo}, {whole.hi}]")
    for a, b in zip(ordered, ordered[1:]):
        if a.overlaps(b):
            raise MalformedIntervals(f"[{a.lo}, {a.hi}] overlaps [{b.lo}, {b.hi}]")
    return ordered


def find_bad_witness(
    whole: IndexInterval,
    intervals: Sequence[IndexInterval],
    h: int,
    alpha: float,
    *,
    threshold: Optional[float] = None,
) -> Optional[IndexInterval]:
    """The first J = [a, b] (by a, then b) with intervals[h] inside J, J inside
    `whole`, and contained mass < threshold * |J|; None when no such J exists.

    `threshold` defaults to alpha / 4. For a fixed a the contained mass only
    changes where b passes an interval end, so each constant-mass stretch of
    b is settled in closed form; the result equals a scan of every (a, b).
    """
    ordered = _check_family(whole, intervals)
    target = intervals[h]
    thr = _snap(alpha) / 4 if threshold is None else _snap(threshold)
    if thr <= 0:
        return None

    los = [iv.lo for iv in ordered]
    his = [iv.hi for iv in ordered]
    prefix = [0] + list(accumulate(len(iv) for iv in ordered))

    for a in range(whole.lo, target.lo + 1):
        p = bisect_left(los, a)
        b = target.hi
        q = bisect_right(his, b)
        while True:
            mass = prefix[q] - prefix[p]
            stretch_end = his[q] - 1 if q < len(his) else whole.hi
            # mass < thr * (b - a + 1)  <=>  b >= a + floor(mass / thr)
            b_min = max(b, a + math.floor(mass / thr))
            if b_min <= stretch_end:
                return IndexInterval(a, b_min)
            if q >= len(his):
                break
            b = his[q]
            q = bisect_right(his, b)
    return None


def robustify_intervals(
    whole: IndexInterval, intervals: Sequence[IndexInterval], alpha: float
) -> Set[int]:
    """Every h whose interval has no bad witness.

    Requires total mass >= alpha * |whole|; the result then carries mass at
    least alpha/4 * |whole|, and every J containing one of its intervals keeps
    contained mass of at least alpha/4 * |J|.
    """
    _check_family(whole, intervals)
    mass = sum(len(iv) for iv in intervals)
    if mass < _snap(alpha) * len(whole):
        raise PreconditionMassTooLow(
            f"total mass {mass} is below alpha * |I| = {alpha * len(whole):g}",
            code="mass_too_low",
        )
    return {h for h in range(len(intervals)) if find_bad_witness(whole, intervals, h, alpha) is None}
