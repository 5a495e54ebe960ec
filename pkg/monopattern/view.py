"""Query access to a value sequence.

Every algorithm in the package reads its input through a `SequenceView`. A
view carries an index interval and a value range; positions whose value lies
outside the range read as masked (`None`). Restricting a view never copies the
base values, and each view counts the queries issued through it and through
every view derived from it.
"""

import logging
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import EmptyRestriction, IndexOutsideInterval, UnsupportedFormat
from .models.intervals import IndexInterval, ValueRange

logger = logging.getLogger(__name__)

# None stands for a masked position.
MaskedValue = Optional[float]

IntervalLike = Union[IndexInterval, Tuple[int, int]]


class SequenceView:
    """Read-only, query-counted access to `base` under an interval and range mask.

    Usage:
        view = SequenceView([5, 1, 6, 2, 7, 3])
        low = view.restrict(value_range=ValueRange.below(6))
        low.query(2)        # None: 6 is masked
        view.query_count    # includes the query issued through `low`
    """

    def __init__(
        self,
        values: Iterable[float],
        interval: Optional[IntervalLike] = None,
        value_range: Optional[ValueRange] = None,
    ) -> None:
        # Tuples are shared as-is so trials over one instance reuse a single base.
        base = values if isinstance(values, tuple) else tuple(float(v) for v in values)
        if not base:
            raise EmptyRestriction("cannot view an empty sequence", code="empty_base")
        full = IndexInterval.of_length(len(base))
        self._init(base, full, ValueRange.full(), parent=None)
        if interval is not None or value_range is not None:
            # Delegate validation to restrict, then adopt its masks as our own.
            child = self.restrict(interval, value_range)
            self._interval = child.interval
            self._range = child.value_range

    def _init(
        self,
        base: Tuple[float, ...],
        interval: IndexInterval,
        value_range: ValueRange,
        parent: Optional["SequenceView"],
    ) -> None:
        self._base = base
        self._interval = interval
        self._range = value_range
        self._parent = parent
        self._count = 0

    @property
    def base(self) -> Tuple[float, ...]:
        return self._base

    @property
    def interval(self) -> IndexInterval:
        return self._interval

    @property
    def value_range(self) -> ValueRange:
        return self._range

    @property
    def query_count(self) -> int:
        """Queries issued through this view and every view derived from it."""
        return self._count

    def __len__(self) -> int:
        return len(self._interval)

    def __repr__(self) -> str:
        return (
            f"SequenceView(n={len(self._base)}, interval=[{self._interval.lo}, "
            f"{self._interval.hi}], queries={self._count})"
        )

    def query(self, i: int) -> MaskedValue:
        if not self._interval.lo <= i <= self._interval.hi:
            raise IndexOutsideInterval(
                f"index {i} outside [{self._interval.lo}, {self._interval.hi}]",
                code="query_outside",
            )
        node: Optional[SequenceView] = self
        while node is not None:
            node._count += 1
            node = node._parent
        value = self._base[i]
        return value if self._range.contains(value) else None

    def restrict(
        self,
        interval: Optional[IntervalLike] = None,
        value_range: Optional[ValueRange] = None,
    ) -> "SequenceView":
        """A child view over a sub-interval with the intersected value range.

        The child starts with a zero counter; its queries are also charged to
        this view and its ancestors.
        """
        target = self._coerce_interval(interval)
        if not target.is_subset(self._interval):
            raise IndexOutsideInterval(
                f"[{target.lo}, {target.hi}] is not inside "
                f"[{self._interval.lo}, {self._interval.hi}]",
                code="restrict_outside",
            )
        # intersect raises EmptyRestriction when nothing is admitted.
        combined = self._range if value_range is None else self._range.intersect(value_range)
        child = object.__new__(SequenceView)
        child._init(self._base, target, combined, parent=self)
        return child

    def _coerce_interval(self, interval: Optional[IntervalLike]) -> IndexInterval:
        if interval is None:
            return self._interval
        if isinstance(interval, IndexInterval):
            return interval
        lo, hi = interval
        if lo > hi:
            raise EmptyRestriction(f"interval [{lo}, {hi}] is empty", code="empty_interval")
        if lo < 0:
            raise IndexOutsideInterval(f"interval [{lo}, {hi}] starts below 0", code="restrict_outside")
        return IndexInterval(lo, hi)


def query_count(view: SequenceView) -> int:
    return view.query_count


def load_sequence(path: Union[str, Path]) -> Tuple[float, ...]:
    """Read values from `.txt` (one decimal per line) or `.f64` (raw little-endian doubles)."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".txt":
        values = _parse_text(path)
    elif suffix == ".f64":
        values = tuple(np.fromfile(path, dtype="<f8").tolist())
    else:
        raise UnsupportedFormat(
            f"unsupported sequence format {path.suffix!r}; use .txt or .f64",
            code="sequence_format",
        )
    logger.debug("loaded %d values from %s", len(values), path)
    return values


def _parse_text(path: Path) -> Tuple[float, ...]:
    values = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise UnsupportedFormat(
                f"{path.name}:{lineno}: {line.strip()!r} is not a number", code="sequence_value"
            ) from None
    return tuple(values)


def save_sequence(path: Union[str, Path], values: Sequence[float]) -> None:
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".txt":
        path.write_text("".join(f"{float(v)!r}\n" for v in values), encoding="utf-8")
    elif suffix == ".f64":
        np.asarray(values, dtype="<f8").tofile(path)
    else:
        raise UnsupportedFormat(
            f"unsupported sequence format {path.suffix!r}; use .txt or .f64",
            code="sequence_format",
        )
