"""Exact (linear-access) oracles over whole sequences.

These read every value, so they are ground truth for certification and tests,
never part of a sublinear run.
"""

from bisect import bisect_left, bisect_right
from typing import Dict, List, Optional, Sequence, Union

from .errors import InvalidParameter
from .models.intervals import IndexInterval, ValueRange
from .models.patterns import DisjointFamily, PatternWitness


def longest_increasing_indices(values: Sequence[float]) -> List[int]:
    """Positions of one longest strictly increasing subsequence.

    Patience sorting: `tails[j]` is the smallest value ending an increasing run
    of length j+1. Equal values replace rather than extend a pile, so ties
    never chain.
    """
    tails: List[float] = []
    tail_pos: List[int] = []
    back = [-1] * len(values)
    for i, v in enumerate(values):
        j = bisect_left(tails, v)
        if j == len(tails):
            tails.append(v)
            tail_pos.append(i)
        else:
            tails[j] = v
            tail_pos[j] = i
        back[i] = tail_pos[j - 1] if j > 0 else -1

    chain: List[int] = []
    i = tail_pos[-1] if tail_pos else -1
    while i >= 0:
        chain.append(i)
        i = back[i]
    chain.reverse()
    return chain


def lis_length(seq: Sequence[float]) -> int:
    return len(longest_increasing_indices(seq))


def find_pattern_exact(seq: Sequence[float], k: int) -> Optional[PatternWitness]:
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}", code="k_range")
    chain = longest_increasing_indices(seq)
    if len(chain) < k:
        return None
    return PatternWitness.read(seq, chain[:k])


def greedy_disjoint_family(seq: Sequence[float], k: int) -> DisjointFamily:
    """Greedily extract disjoint length-k patterns until none is left.

    Each pass scans the surviving positions left to right with patience piles
    capped at k; the first time pile k receives an element the chain ending
    there is emitted, its positions are removed and the piles restart. Passes
    repeat until one emits nothing, so the returned family is maximal.
    """
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}", code="k_range")
    alive = list(range(len(seq)))
    family = DisjointFamily()
    while True:
        used = set()
        tails: List[float] = []
        tail_pos: List[int] = []
        back: Dict[int, int] = {}
        for i in alive:
            v = seq[i]
            j = bisect_left(tails, v)
            if j == len(tails):
                tails.append(v)
                tail_pos.append(i)
            else:
                tails[j] = v
                tail_pos[j] = i
            back[i] = tail_pos[j - 1] if j > 0 else -1
            if j == k - 1:
                chain = [i]
                while back[chain[-1]] >= 0:
                    chain.append(back[chain[-1]])
                chain.reverse()
                family.tuples.append(PatternWitness.read(seq, chain))
                used.update(chain)
                tails, tail_pos, back = [], [], {}
        if not used:
            return family
        alive = [i for i in alive if i not in used]


def greene_shape(seq: Sequence[float]) -> List[int]:
    """Row lengths of the RSK insertion tableau of the negated sequence.

    By Greene's theorem the first m rows sum to the largest number of
    positions covered by m non-increasing subsequences of `seq`.
    """
    rows: List[List[float]] = []
    for v in seq:
        x = -v
        for row in rows:
            # Rows stay weakly increasing; bump the leftmost entry > x.
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                x = None
                break
            row[j], x = x, row[j]
        if x is not None:
            rows.append([x])
    return [len(row) for row in rows]


def distance_to_free(seq: Sequence[float], k: int) -> int:
    """Minimum deletions leaving no strictly increasing subsequence of length k."""
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}", code="k_range")
    shape = greene_shape(seq)
    return len(seq) - sum(shape[: k - 1])


def is_far(seq: Sequence[float], k: int, eps: float) -> bool:
    return distance_to_free(seq, k) >= eps * len(seq) - 1e-9


def free_decomposition(seq: Sequence[float]) -> List[List[int]]:
    """Partition of all positions into lis_length(seq) non-increasing subsequences.

    Each value goes on the leftmost pile whose top is >= it; pile tops stay
    strictly increasing from left to right.
    """
    tops: List[float] = []
    piles: List[List[int]] = []
    for i, v in enumerate(seq):
        j = bisect_left(tops, v)
        if j == len(tops):
            tops.append(v)
            piles.append([i])
        else:
            tops[j] = v
            piles[j].append(i)
    return piles


def verify_witness(
    seq: Sequence[float],
    w: Union[PatternWitness, Sequence[int]],
    interval: Optional[IndexInterval] = None,
    value_range: Optional[ValueRange] = None,
) -> bool:
    """True iff `w` is a strictly increasing pattern inside `interval` and `value_range`.

    Values are read from `seq`; a witness that carries values must agree with them.
    """
    indices = list(w.indices) if isinstance(w, PatternWitness) else list(w)
    if not indices:
        return False
    if isinstance(w, PatternWitness) and w.values:
        if len(w.values) != len(indices):
            return False
    for pos, i in enumerate(indices):
        if not isinstance(i, int) or not 0 <= i < len(seq):
            return False
        if interval is not None and not interval.lo <= i <= interval.hi:
            return False
        value = seq[i]
        if value_range is not None and not value_range.contains(value):
            return False
        if isinstance(w, PatternWitness) and w.values and w.values[pos] != value:
            return False
        if pos > 0:
            prev = indices[pos - 1]
            if i <= prev or not seq[prev] < value:
                return False
    return True
