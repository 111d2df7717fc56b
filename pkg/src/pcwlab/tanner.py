"""
Tanner graphs, normal graphs and the bit-even reduction.

Indices are 0-based throughout the library; serialized forms add one.
A TannerGraph stores its edges as sorted ``(bit, check)`` pairs, so the
edges incident to bit ``i`` form a contiguous block in edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, NotACycleCodeError
from .gf2 import as_binary_matrix


@dataclass(frozen=True)
class TannerGraph:
    num_bits: int
    num_checks: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(i), int(j)) for i, j in self.edges)
        if list(edges) != sorted(set(edges)):
            raise DomainError("Tanner graph edges must be sorted and free of duplicates")
        for i, j in edges:
            if not (0 <= i < self.num_bits and 0 <= j < self.num_checks):
                raise DomainError(f"edge ({i}, {j}) out of range")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def bit_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.num_bits)]
        for i, j in self.edges:
            nbrs[i].append(j)
        return tuple(tuple(a) for a in nbrs)

    @cached_property
    def check_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.num_checks)]
        for i, j in self.edges:
            nbrs[j].append(i)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def bit_degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.bit_neighbors)

    @property
    def check_degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.check_neighbors)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: t for t, e in enumerate(self.edges)}

    def to_parity_matrix(self) -> np.ndarray:
        H = np.zeros((self.num_checks, self.num_bits), dtype=np.uint8)
        for i, j in self.edges:
            H[j, i] = 1
        return H


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loopless multigraph; edge ``t`` is ``edges[t]``."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if a == b:
                raise DomainError(f"loop at vertex {a} is not allowed")
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise DomainError(f"edge ({a}, {b}) out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.num_vertices)]
        for t, (a, b) in enumerate(self.edges):
            inc[a].append(t)
            inc[b].append(t)
        return tuple(tuple(x) for x in inc)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incident)

    def other_end(self, t: int, v: int) -> int:
        a, b = self.edges[t]
        return b if v == a else a

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for t in self.incident[v]:
                w = self.other_end(t, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices


def from_parity_matrix(H) -> TannerGraph:
    H = as_binary_matrix(H)
    r, n = H.shape
    checks, bits = np.nonzero(H)
    edges = sorted(zip(bits.tolist(), checks.tolist()))
    return TannerGraph(num_bits=n, num_checks=r, edges=tuple(edges))


def is_bit_even(T: TannerGraph) -> bool:
    return all(d % 2 == 0 for d in T.bit_degrees)


def is_cycle_code(T: TannerGraph) -> bool:
    return all(d == 2 for d in T.bit_degrees)


def duplicate_checks(H) -> np.ndarray:
    """Repeat every row of ``H`` twice in place; the code and its cone are unchanged."""
    H = as_binary_matrix(H)
    return np.repeat(H, 2, axis=0)


def normal_graph(T: TannerGraph) -> MultiGraph:
    """Graph on the check nodes with edge ``i`` joining the two checks of bit ``i``."""
    edges = []
    for i, nb in enumerate(T.bit_neighbors):
        if len(nb) != 2:
            raise NotACycleCodeError(
                f"bit {i + 1} has degree {len(nb)}; a normal graph needs every bit of degree 2"
            )
        edges.append((nb[0], nb[1]))
    return MultiGraph(num_vertices=T.num_checks, edges=tuple(edges))


def incidence_matrix(G: MultiGraph) -> np.ndarray:
    """Parity-check matrix of the cycle code on ``G`` (checks = vertices, bits = edges)."""
    H = np.zeros((G.num_vertices, G.num_edges), dtype=np.uint8)
    for t, (a, b) in enumerate(G.edges):
        H[a, t] = 1
        H[b, t] = 1
    return H


def tanner_as_multigraph(T: TannerGraph) -> MultiGraph:
    """The Tanner graph as a plain graph: bits are vertices ``0..n-1``, checks follow.

    Edge ``t`` of the result is edge ``t`` of ``T``.
    """
    n = T.num_bits
    return MultiGraph(
        num_vertices=n + T.num_checks,
        edges=tuple((i, n + j) for i, j in T.edges),
    )
