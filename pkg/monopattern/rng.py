import random
from typing import List


class Rng:
    """Seeded random stream; one seed fixes a whole run trace."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._random = random.Random(seed)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive."""
        return self._random.randint(lo, hi)

    def sample_range(self, lo: int, hi: int, count: int) -> List[int]:
        """`count` distinct integers from [lo, hi]; all of them when the range is smaller."""
        population = range(lo, hi + 1)
        if count >= len(population):
            return list(population)
        return self._random.sample(population, count)
