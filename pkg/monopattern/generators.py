"""Certified instance families.

Far styles are built together with an explicit family of ceil(eps*n) disjoint
length-k patterns; free styles together with a partition into k-1
non-increasing pieces. Both certificates are re-checked before an instance
is returned.
"""

import json
import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .errors import InfeasibleDensity, InvalidParameter, InvariantViolation
from .exact import free_decomposition, verify_witness
from .models.certificates import GrowingSuffixCert, SplittableCert
from .models.instances import CertifiedInstance, InstanceSpec
from .models.intervals import IndexInterval
from .models.patterns import DisjointFamily, PatternWitness
from .rng import Rng
from .structure import check_growing_suffix, suffix_scales
from .view import save_sequence

logger = logging.getLogger(__name__)

Layout = Tuple[List[float], List[List[int]]]


def pattern_count(spec: InstanceSpec) -> int:
    """ceil(eps * n), tolerant of eps * n landing a hair above an integer."""
    return max(1, math.ceil(spec.eps * spec.n - 1e-9))


def gen_far_instance(spec: InstanceSpec) -> CertifiedInstance:
    if not spec.is_far:
        raise InvalidParameter(f"{spec.style!r} is not a far style", code="style")
    m = pattern_count(spec)
    if m * spec.k > spec.n:
        raise InfeasibleDensity(
            f"{m} disjoint patterns of length {spec.k} do not fit in n={spec.n}",
            code="infeasible_density",
        )

    split = growth = None
    if spec.style == "blocks":
        values, tuples = _blocks(m, spec.k)
    elif spec.style == "staircase":
        values, tuples, growth = _staircase(spec.n, m, spec.k)
    elif spec.style == "suffix":
        values, tuples = _spread_run(spec.n, m, spec.k)
    else:
        if spec.k < 2:
            raise InvalidParameter("splittable instances need k >= 2", code="k_range")
        values, tuples, split = _splittable(spec.n, m, spec.k)

    values = values + _filler(spec.n - len(values))
    family = DisjointFamily([PatternWitness.read(values, t) for t in tuples])
    if split is not None:
        split = split.model_copy(update={"tuples": family})
    instance = CertifiedInstance(spec=spec, values=values, family=family, split=split, growth=growth)
    _check_far(instance, m)
    logger.debug("generated %s instance n=%d k=%d with %d patterns", spec.style, spec.n, spec.k, m)
    return instance


def gen_free_instance(spec: InstanceSpec) -> CertifiedInstance:
    if spec.is_far:
        raise InvalidParameter(f"{spec.style!r} is not a free style", code="style")
    pieces = spec.k - 1
    if spec.style == "free-concat":
        owner = [min(i * pieces // spec.n, pieces - 1) for i in range(spec.n)]
    else:
        rng = Rng(spec.seed)
        owner = [rng.randint(0, pieces - 1) for _ in range(spec.n)]

    proof: List[List[int]] = [[] for _ in range(pieces)]
    for i, r in enumerate(owner):
        proof[r].append(i)
    values = [0.0] * spec.n
    for r, positions in enumerate(proof):
        # Piece r decreases inside the band [r*n, (r+1)*n).
        for rank, i in enumerate(positions):
            values[i] = float(r * spec.n + len(positions) - 1 - rank)
    proof = [positions for positions in proof if positions]

    instance = CertifiedInstance(spec=spec, values=values, free_proof=proof)
    _check_free(instance)
    return instance


def gen_instance(spec: InstanceSpec) -> CertifiedInstance:
    return gen_far_instance(spec) if spec.is_far else gen_free_instance(spec)


def save_instance(path: Union[str, Path], instance: CertifiedInstance) -> Path:
    """Write the values to `path` and the certificate to `<path>.json`."""
    path = Path(path)
    save_sequence(path, instance.values)
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(instance.certificate(), indent=2), encoding="utf-8")
    return sidecar


# -- layouts -----------------------------------------------------------------
# Each returns values for a prefix of the sequence (all >= 0) and the index
# tuples of its patterns; `_filler` pads the rest with values below 0.


def _blocks(m: int, k: int) -> Layout:
    """m consecutive increasing runs of length k, each run below the previous one."""
    values = [float((m - 1 - b) * k + j) for b in range(m) for j in range(k)]
    tuples = [list(range(b * k, (b + 1) * k)) for b in range(m)]
    return values, tuples


def _staircase(n: int, m: int, k: int) -> Tuple[List[float], List[List[int]], Optional[GrowingSuffixCert]]:
    """k decreasing steps of m values, each step above the previous one.

    Step s is spread over a region m * 2^s long, after a leading gap of m,
    so seen from index 0 step s sits in its own dyadic scale. When n is too
    short for that, the regions grow geometrically only as far as the spare
    room allows and no growing-suffix certificate is attached. Copy j takes
    the j-th element of every step.
    """
    dyadic = m << k <= n
    if dyadic:
        start, sizes = m, [m << s for s in range(k)]
    else:
        spare, weight = n - m * k, (1 << k) - 1 - k
        start, sizes = 0, [m + (spare * ((1 << s) - 1) // weight if weight else 0) for s in range(k)]

    values: List[Optional[float]] = [None] * n
    steps = []
    for s, size in enumerate(sizes):
        positions = [start + j * size // m for j in range(m)]
        for j, i in enumerate(positions):
            values[i] = float(s * m + m - 1 - j)
        steps.append(positions)
        start += size
    fill = iter(_filler(n - m * k))
    values = [v if v is not None else next(fill) for v in values]
    tuples = [[positions[j] for positions in steps] for j in range(m)]

    cert = _staircase_growth(n, steps) if dyadic and n >= 2 else None
    return values, tuples, cert


def _staircase_growth(n: int, steps: List[List[int]]) -> GrowingSuffixCert:
    # Step s ends at m * 2^(s+1) - 1, so its hits in the scale holding that end
    # form D_t; consecutive steps land in consecutive scales.
    scales = suffix_scales(0, n)
    scale_sets: List[List[int]] = [[] for _ in scales]
    for positions in steps:
        t = positions[-1].bit_length()
        scale = scales[t - 1]
        scale_sets[t - 1] = [i for i in positions if i in scale]
    while scale_sets and not scale_sets[-1]:
        scale_sets.pop()

    densities = [Fraction(len(hits), len(scale)) for hits, scale in zip(scale_sets, scales)]
    # Thousandths round alpha up and beta down, and survive the checker's snapping.
    alpha = min(Fraction(1), Fraction(math.ceil(max(densities) * 1000), 1000))
    beta = Fraction(math.floor(sum(densities) * 1000), 1000)
    return GrowingSuffixCert(start=0, scale_sets=scale_sets, alpha=float(alpha), beta=float(beta))


def _spread_run(n: int, m: int, k: int) -> Layout:
    """One increasing run of m*k values spread evenly over n positions."""
    run = m * k
    positions = [i * n // run for i in range(run)]
    values = [-1.0] * n
    for rank, i in enumerate(positions):
        values[i] = float(rank)
    fill = iter(_filler(n - run))
    values = [v if v >= 0 else next(fill) for v in values]
    tuples = [positions[b * k : (b + 1) * k] for b in range(m)]
    return values, tuples


def _splittable(n: int, m: int, k: int) -> Tuple[List[float], List[List[int]], Optional[SplittableCert]]:
    """L holds the m prefixes of length k//2, R the m suffixes, and the filler
    gap M sits between them; L and R recurse on their own halves."""
    c = k // 2
    left_values, left_tuples = _split_layout(m, c)
    right_values, right_tuples = _split_layout(m, k - c)
    gap = n - m * k

    offset = len(left_values)
    values = left_values + _filler(gap) + [v + offset for v in right_values]
    shift = offset + gap
    tuples = [lt + [j + shift for j in rt] for lt, rt in zip(left_tuples, right_tuples)]

    if gap == 0:
        return values, tuples, None
    left = IndexInterval(0, offset - 1)
    middle = IndexInterval(offset, shift - 1)
    right = IndexInterval(shift, n - 1)
    cert = SplittableCert(
        interval=IndexInterval(0, n - 1),
        tuples=DisjointFamily(),
        split_index=c,
        left=left,
        middle=middle,
        right=right,
        alpha=min(len(left), len(middle), len(right)) / n,
        beta=m / n,
    )
    return values, tuples, cert


def _split_layout(m: int, k: int) -> Layout:
    # Values are 0..m*k-1 with every prefix value below every suffix value.
    if k == 1:
        return [float(m - 1 - j) for j in range(m)], [[j] for j in range(m)]
    c = k // 2
    left_values, left_tuples = _split_layout(m, c)
    right_values, right_tuples = _split_layout(m, k - c)
    offset = len(left_values)
    values = left_values + [v + offset for v in right_values]
    tuples = [lt + [j + offset for j in rt] for lt, rt in zip(left_tuples, right_tuples)]
    return values, tuples


def _filler(count: int) -> List[float]:
    return [float(-1 - i) for i in range(count)]


# -- certification -----------------------------------------------------------


def _check_far(instance: CertifiedInstance, m: int) -> None:
    family = instance.family
    if len(family) < m or not family.is_disjoint() or not family.is_uniform():
        raise InvariantViolation(f"{instance.spec.style} family failed certification", code="certify")
    if any(not verify_witness(instance.values, w) or len(w) != instance.spec.k for w in family.tuples):
        raise InvariantViolation(f"{instance.spec.style} family holds an invalid pattern", code="certify")
    if instance.growth is not None and not check_growing_suffix(instance.values, instance.growth):
        raise InvariantViolation(f"{instance.spec.style} growing suffix failed certification", code="certify")


def _check_free(instance: CertifiedInstance) -> None:
    values = instance.values
    covered = sorted(i for piece in instance.free_proof for i in piece)
    if covered != list(range(len(values))) or len(instance.free_proof) > instance.spec.k - 1:
        raise InvariantViolation("free proof does not partition the positions", code="certify")
    for piece in instance.free_proof:
        if any(values[a] < values[b] for a, b in zip(piece, piece[1:])):
            raise InvariantViolation("free proof piece is not non-increasing", code="certify")
    # Patience piles give an independent decomposition; more than k-1 piles
    # means a length-k pattern survived.
    if len(free_decomposition(values)) >= instance.spec.k:
        raise InvariantViolation("free instance contains a length-k pattern", code="certify")
