"""Tests for PatternWitness, DisjointFamily and RunOutcome."""

from monopattern.models.patterns import DisjointFamily, PatternWitness, RunOutcome


class TestPatternWitness:
    def test_read_takes_values_from_sequence(self):
        w = PatternWitness.read([5.0, 1.0, 6.0], [1, 2])
        assert w.indices == (1, 2)
        assert w.values == (1.0, 6.0)
        assert len(w) == 2

    def test_from_points_and_points(self):
        w = PatternWitness.from_points([(0, 1.0), (3, 2.0)])
        assert w.points() == [(0, 1.0), (3, 2.0)]

    def test_concat(self):
        left = PatternWitness((0,), (1.0,))
        right = PatternWitness((4, 5), (2.0, 3.0))
        assert left.concat(right) == PatternWitness((0, 4, 5), (1.0, 2.0, 3.0))

    def test_to_dict(self):
        w = PatternWitness((0, 2), (1.0, 3.0))
        assert w.to_dict() == {"indices": [0, 2], "values": [1.0, 3.0]}


class TestDisjointFamily:
    def test_empty_family(self):
        family = DisjointFamily()
        assert len(family) == 0
        assert family.k is None
        assert family.is_disjoint()

    def test_disjoint(self):
        family = DisjointFamily([PatternWitness((0, 1)), PatternWitness((2, 3))])
        assert family.is_disjoint()
        assert family.is_uniform()
        assert family.k == 2
        assert family.indices() == frozenset({0, 1, 2, 3})

    def test_overlap_detected(self):
        family = DisjointFamily([PatternWitness((0, 1)), PatternWitness((1, 3))])
        assert not family.is_disjoint()

    def test_mixed_lengths(self):
        family = DisjointFamily([PatternWitness((0, 1)), PatternWitness((2, 3, 4))])
        assert not family.is_uniform()


class TestRunOutcome:
    def test_fail(self):
        outcome = RunOutcome(queries=12)
        assert not outcome.found
        assert outcome.to_dict() == {"found": False, "queries": 12}

    def test_found(self):
        outcome = RunOutcome(PatternWitness((1, 4), (0.0, 2.0)), queries=30)
        assert outcome.found
        assert outcome.to_dict() == {"found": True, "witness": [1, 4], "queries": 30}
