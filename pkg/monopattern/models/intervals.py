"""Index intervals and value ranges: the two masks a SequenceView carries.

Indices are 0-based and both interval ends are inclusive. Value ranges default
to an inclusive lower bound and an exclusive upper bound, which is the shape of
the "f(i) < f(y)" / "f(i) >= f(y)" splits used by the tester.
"""

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from ..errors import EmptyRestriction, MalformedInterval


@dataclass(frozen=True)
class IndexInterval:
    """Closed interval [lo, hi] of sequence positions."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise MalformedInterval(f"interval [{self.lo}, {self.hi}] is empty")
        if self.lo < 0:
            raise MalformedInterval(f"interval [{self.lo}, {self.hi}] starts below 0")

    @classmethod
    def clipped(cls, lo: int, hi: int, within: "IndexInterval") -> Optional["IndexInterval"]:
        """[lo, hi] intersected with `within`, or None when nothing is left."""
        lo = max(lo, within.lo)
        hi = min(hi, within.hi)
        if lo > hi:
            return None
        return cls(lo, hi)

    @classmethod
    def of_length(cls, n: int) -> "IndexInterval":
        return cls(0, n - 1)

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and self.lo <= i <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def is_subset(self, other: "IndexInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "IndexInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class ValueRange:
    """Non-empty interval of admissible values; a missing bound is infinite.

    Bounds must satisfy lower < upper, or lower == upper with both ends
    inclusive; anything else raises EmptyRestriction.
    """

    lower: Optional[float] = None
    upper: Optional[float] = None
    lower_inclusive: bool = True
    upper_inclusive: bool = False

    def __post_init__(self) -> None:
        if _admits_nothing(self.lower, self.upper, self.lower_inclusive, self.upper_inclusive):
            raise EmptyRestriction(
                f"value range ({self.lower}, {self.upper}) with inclusive ends "
                f"({self.lower_inclusive}, {self.upper_inclusive}) admits no value",
                code="empty_range",
            )

    @classmethod
    def full(cls) -> "ValueRange":
        return cls()

    @classmethod
    def below(cls, value: float) -> "ValueRange":
        """(-inf, value): the "f(i) < f(y)" side."""
        return cls(upper=value)

    @classmethod
    def at_least(cls, value: float) -> "ValueRange":
        """[value, +inf): the "f(i) >= f(y)" side."""
        return cls(lower=value)

    def contains(self, value: float) -> bool:
        if math.isnan(value):
            return False
        if self.lower is not None:
            if value < self.lower or (value == self.lower and not self.lower_inclusive):
                return False
        if self.upper is not None:
            if value > self.upper or (value == self.upper and not self.upper_inclusive):
                return False
        return True

    def __contains__(self, value: object) -> bool:
        return isinstance(value, (int, float)) and self.contains(float(value))

    def intersect(self, other: "ValueRange") -> "ValueRange":
        """Tightest range admitting exactly the values both ranges admit.

        Raises EmptyRestriction when the two ranges share no value.
        """
        lower, lower_inc = _tighter_lower(
            (self.lower, self.lower_inclusive), (other.lower, other.lower_inclusive)
        )
        upper, upper_inc = _tighter_upper(
            (self.upper, self.upper_inclusive), (other.upper, other.upper_inclusive)
        )
        return ValueRange(lower, upper, lower_inc, upper_inc)


def _admits_nothing(
    lower: Optional[float], upper: Optional[float], lower_inclusive: bool, upper_inclusive: bool
) -> bool:
    if lower is None or upper is None or lower < upper:
        return False
    if lower > upper:
        return True
    return not (lower_inclusive and upper_inclusive)


def _tighter_lower(a: tuple, b: tuple) -> tuple:
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a[0], a[1] and b[1]


def _tighter_upper(a: tuple, b: tuple) -> tuple:
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a[0], a[1] and b[1]
