"""Shared matrices and random generators for the test suite."""

import random

import numpy as np
from pcwlab.tanner import MultiGraph

DUMBBELL = np.array(
    [
        [1, 1, 0, 0, 0, 0, 0],
        [0, 1, 1, 1, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 0, 1],
        [0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 1, 1],
    ],
    dtype=np.uint8,
)

H0 = np.array([[1, 1, 0], [0, 1, 1], [1, 1, 1]], dtype=np.uint8)

# lines reported by the acceptance suite, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def random_ldpc(rng: random.Random, n: int, r: int) -> np.ndarray:
    """Random parity-check matrix with column weights drawn from {2, 3}."""
    H = np.zeros((r, n), dtype=np.uint8)
    for i in range(n):
        w = min(rng.choice((2, 3)), r)
        H[rng.sample(range(r), w), i] = 1
    return H


def random_connected_multigraph(rng: random.Random, max_edges: int) -> MultiGraph:
    nv = rng.randint(2, min(5, max_edges + 1))
    edges = [(rng.randrange(v), v) for v in range(1, nv)]  # spanning tree
    for _ in range(rng.randint(0, max_edges - len(edges))):
        a, b = rng.sample(range(nv), 2)
        edges.append((min(a, b), max(a, b)))
    rng.shuffle(edges)
    return MultiGraph(num_vertices=nv, edges=tuple(edges))
