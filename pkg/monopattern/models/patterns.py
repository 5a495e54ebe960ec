from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class PatternWitness:
    """A (12...k)-pattern: positions and the values read at them."""

    indices: Tuple[int, ...]
    values: Tuple[float, ...] = ()

    def __len__(self) -> int:
        return len(self.indices)

    @classmethod
    def from_points(cls, points: Sequence[Tuple[int, float]]) -> "PatternWitness":
        return cls(tuple(i for i, _ in points), tuple(v for _, v in points))

    @classmethod
    def read(cls, seq: Sequence[float], indices: Sequence[int]) -> "PatternWitness":
        """Witness over `indices` with values read straight from `seq`."""
        return cls(tuple(indices), tuple(float(seq[i]) for i in indices))

    def concat(self, other: "PatternWitness") -> "PatternWitness":
        return PatternWitness(self.indices + other.indices, self.values + other.values)

    def points(self) -> List[Tuple[int, float]]:
        return list(zip(self.indices, self.values))

    def to_dict(self) -> Dict[str, Any]:
        return {"indices": list(self.indices), "values": list(self.values)}


@dataclass
class DisjointFamily:
    """Length-k patterns with pairwise disjoint index sets."""

    tuples: List[PatternWitness] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.tuples)

    @property
    def k(self) -> Optional[int]:
        return len(self.tuples[0]) if self.tuples else None

    def indices(self) -> FrozenSet[int]:
        """E(T): the union of all member positions."""
        return frozenset(i for w in self.tuples for i in w.indices)

    def is_disjoint(self) -> bool:
        total = sum(len(w) for w in self.tuples)
        return len(self.indices()) == total

    def is_uniform(self) -> bool:
        return len({len(w) for w in self.tuples}) <= 1


@dataclass
class RunOutcome:
    """Result of one tester invocation: Found(witness) or Fail, plus queries."""

    witness: Optional[PatternWitness] = None
    queries: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"found": self.found}
        if self.witness is not None:
            data["witness"] = list(self.witness.indices)
        data["queries"] = self.queries
        return data
