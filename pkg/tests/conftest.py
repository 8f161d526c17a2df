import random

import pytest
from hypothesis import settings

from bicirc.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)
                                if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20261019)
