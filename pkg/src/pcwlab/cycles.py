"""
Cycle machinery on multigraphs and Tanner graphs.

Closed walks are handled on directed edges: slot ``t < m`` is edge ``t``
oriented from its lower to its higher endpoint, slot ``t + m`` is its
reverse. A non-backtracking step never follows a directed edge by its own
reverse. Equivalence classes of closed walks are represented by their
least rotation, which for primitive walks is unique.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import CapacityError, NotACodewordError, NotBitEvenError
from .gf2 import as_bit_vector, syndrome
from .tanner import MultiGraph, TannerGraph, is_bit_even

DEFAULT_MAX_CYCLE_EDGES = 20
DEFAULT_MAX_WALK_EDGES = 16


@dataclass(frozen=True)
class EdgeWalk:
    """A walk given by its edges and the vertices it passes.

    ``vertices`` has one more entry than ``edges``: edge ``s`` runs from
    ``vertices[s]`` to ``vertices[s + 1]``. Cycles repeat the start vertex
    at the end.
    """

    edges: tuple[Hashable, ...]
    vertices: tuple[Hashable, ...]
    kind: str = "path"

    def __post_init__(self):
        if self.kind not in ("path", "cycle"):
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if self.edges and len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a walk needs exactly one more vertex than edges")

    def __len__(self):
        return len(self.edges)

    def is_backtrackless(self) -> bool:
        return all(a != b for a, b in zip(self.edges, self.edges[1:]))

    def is_tailless(self) -> bool:
        return self.kind == "cycle" and (len(self.edges) < 2 or self.edges[0] != self.edges[-1])

    def is_closed(self) -> bool:
        return bool(self.edges) and self.vertices[0] == self.vertices[-1]

    def follows(self, endpoints: Callable[[Hashable], Sequence[Hashable]]) -> bool:
        """True iff every edge joins the two vertices listed around it."""
        for s, e in enumerate(self.edges):
            a, b = endpoints(e)
            if {a, b} != {self.vertices[s], self.vertices[s + 1]}:
                return False
        return self.kind == "path" or self.is_closed()

    def usage(self, num_edges: int) -> tuple[int, ...]:
        counts = [0] * num_edges
        for e in self.edges:
            counts[e] += 1
        return tuple(counts)


def graded_lex_key(v: Sequence[int]):
    return (sum(v), tuple(v))


def simple_cycle_characteristic_vectors(
    G: MultiGraph, max_edges: int = DEFAULT_MAX_CYCLE_EDGES
) -> list[tuple[int, ...]]:
    """Characteristic vectors of all simple cycles of ``G`` (parallel pairs included)."""
    if G.num_edges > max_edges:
        raise CapacityError(
            f"graph has {G.num_edges} edges, above max_edges={max_edges}",
            bound="max_edges",
            limit=max_edges,
        )
    found = set()
    m = G.num_edges

    def extend(start, v, path, visited):
        for t in G.incident[v]:
            if t in path:
                continue
            w = G.other_end(t, v)
            if w == start:
                vec = [0] * m
                for e in path + [t]:
                    vec[e] = 1
                found.add(tuple(vec))
            elif w > start and w not in visited:
                visited.add(w)
                path.append(t)
                extend(start, w, path, visited)
                path.pop()
                visited.discard(w)

    for s in range(G.num_vertices):
        extend(s, s, [], {s})
    return sorted(found, key=graded_lex_key)


class DirectedEdges:
    """Directed-edge view of a multigraph with the fixed orientation convention."""

    def __init__(self, G: MultiGraph):
        m = G.num_edges
        self.graph = G
        self.m = m
        self.tail = [0] * (2 * m)
        self.head = [0] * (2 * m)
        for t, (a, b) in enumerate(G.edges):
            lo, hi = min(a, b), max(a, b)
            self.tail[t], self.head[t] = lo, hi
            self.tail[t + m], self.head[t + m] = hi, lo
        out = defaultdict(list)
        for d in range(2 * m):
            out[self.tail[d]].append(d)
        self.succ = [
            tuple(e for e in out[self.head[d]] if e != self.reverse(d)) for d in range(2 * m)
        ]

    def reverse(self, d: int) -> int:
        return d + self.m if d < self.m else d - self.m

    def edge(self, d: int) -> int:
        return d % self.m if self.m else 0


def _is_least_rotation(seq: list[int]) -> bool:
    # strict: also rules out periodic (non-primitive) sequences
    L = len(seq)
    return all(seq < seq[k:] + seq[:k] for k in range(1, L))


def _primitive_sequences(D: DirectedEdges, G: MultiGraph, max_length: int) -> list[list[int]]:
    """Least-rotation directed-edge sequences of primitive closed non-backtracking walks."""
    m = D.m
    reps = []
    if m == 0 or max_length <= 0:
        return reps
    # undirected hop distance, used only to prune walks that cannot close in time
    dist = _all_pairs_hops(G)

    for d0 in range(2 * m):
        start = D.tail[d0]
        seq = [d0]

        def grow():
            last = seq[-1]
            if d0 in D.succ[last] and _is_least_rotation(seq):
                reps.append(list(seq))
            if len(seq) >= max_length:
                return
            for e in D.succ[last]:
                if e < d0:
                    continue
                if len(seq) + 1 + dist[D.head[e]][start] > max_length:
                    continue
                seq.append(e)
                grow()
                seq.pop()

        grow()
    return reps


def primitive_cycle_classes(G: MultiGraph, max_length: int) -> list[EdgeWalk]:
    """One representative per class of primitive backtrackless tailless cycles.

    Classes are rotation classes of closed non-backtracking directed-edge
    sequences; a cycle and its reversal are distinct classes.
    """
    D = DirectedEdges(G)
    walks = []
    for s in _primitive_sequences(D, G, max_length):
        verts = tuple(D.tail[d] for d in s) + (D.tail[s[0]],)
        walks.append(EdgeWalk(edges=tuple(D.edge(d) for d in s), vertices=verts, kind="cycle"))
    return walks


def _all_pairs_hops(G: MultiGraph) -> list[list[int]]:
    big = G.num_vertices + 1
    dist = [[big] * G.num_vertices for _ in range(G.num_vertices)]
    for s in range(G.num_vertices):
        dist[s][s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for t in G.incident[v]:
                    w = G.other_end(t, v)
                    if dist[s][w] == big:
                        dist[s][w] = dist[s][v] + 1
                        nxt.append(w)
            frontier = nxt
    return dist


def backtrackless_tailless_closed_walks(
    G: MultiGraph, max_total_edges: int, limit: int = DEFAULT_MAX_WALK_EDGES
) -> list[tuple[tuple[int, ...], int]]:
    """Edge-usage vectors of unions of backtrackless tailless closed walks.

    A union is a multiset of primitive cycle classes with at most
    ``max_total_edges`` edges in total. Each usage vector is returned with
    the number of such multisets realizing it, in graded-lex order; the empty
    union contributes the zero vector with multiplicity 1.
    """
    if max_total_edges > limit:
        raise CapacityError(
            f"max_total_edges={max_total_edges} exceeds the walk enumeration limit {limit}",
            bound="limit",
            limit=limit,
        )
    m = G.num_edges
    # classes with the same usage vector are interchangeable in a multiset:
    # t of them drawn from c kinds can be chosen in C(c + t - 1, t) ways
    D = DirectedEdges(G)
    kinds = Counter()
    for seq in _primitive_sequences(D, G, max_total_edges):
        u = [0] * m
        for d in seq:
            u[d % m] += 1
        kinds[tuple(u)] += 1
    counts = {(0,) * m: 1}
    totals = {(0,) * m: 0}
    for u, c in sorted(kinds.items(), key=lambda kv: sum(kv[0])):
        L = sum(u)
        room = max_total_edges - L
        new = defaultdict(int, counts)  # t = 0
        for vec, ways in counts.items():
            total = totals[vec]
            cur = vec
            t = 1
            while total <= room:
                cur = tuple(a + b for a, b in zip(cur, u))
                total += L
                new[cur] += ways * math.comb(c + t - 1, t)
                totals[cur] = total
                t += 1
        counts = new
    return sorted(counts.items(), key=lambda kv: graded_lex_key(kv[0]))


def euler_cycle_decomposition(T: TannerGraph, c) -> list[EdgeWalk]:
    """Split the subgraph spanned by the support of codeword ``c`` into closed trails.

    One edge-simple cycle per connected component of that subgraph, found by
    Hierholzer's splice starting at the component's lowest bit node. Edges are
    ``(bit, check)`` pairs; vertices are ``("bit", i)`` / ``("check", j)``.
    """
    if not is_bit_even(T):
        raise NotBitEvenError("Tanner graph is not bit-even")
    c = as_bit_vector(c, T.num_bits)
    if syndrome(T.to_parity_matrix(), c).any():
        raise NotACodewordError("vector is not a codeword of the Tanner graph's code")

    adj = defaultdict(list)
    for i, j in T.edges:
        if c[i]:
            adj[("bit", i)].append((("check", j), (i, j)))
            adj[("check", j)].append((("bit", i), (i, j)))
    for v in adj:
        adj[v].sort()
    used = set()
    pointer = defaultdict(int)

    def next_edge(v):
        lst = adj[v]
        while pointer[v] < len(lst) and lst[pointer[v]][1] in used:
            pointer[v] += 1
        return lst[pointer[v]] if pointer[v] < len(lst) else None

    walks = []
    for i in range(T.num_bits):
        v0 = ("bit", i)
        if not c[i] or next_edge(v0) is None:
            continue
        stack = [(v0, None)]
        circuit = []
        while stack:
            v, via = stack[-1]
            nxt = next_edge(v)
            if nxt is None:
                circuit.append(stack.pop())
            else:
                w, e = nxt
                used.add(e)
                stack.append((w, e))
        circuit.reverse()
        verts = tuple(v for v, _ in circuit)
        edges = tuple(e for _, e in circuit[1:])
        walks.append(EdgeWalk(edges=edges, vertices=verts, kind="cycle"))
    return walks
