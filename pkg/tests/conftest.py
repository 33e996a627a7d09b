import random

import numpy as np
import pytest

from totirr import Graph
from totirr.formats import triangle_pairs


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for i, j in triangle_pairs(n):
        if rng.random() < p:
            adj[i, j] = adj[j, i] = True
    return Graph(adj)


@pytest.fixture
def rng():
    return random.Random(20240817)
