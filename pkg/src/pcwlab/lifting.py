"""
Constructive realization of pseudo-codewords on graph covers.

Given a nonnegative integer vector ``p`` satisfying the parity and cone
conditions, ``realize`` builds an M-cover, a cover codeword whose block ``i``
has ``p[i]`` ones, and a family of backtrackless paths through the cover
that accounts for every edge carrying a one.

The path builder keeps, for every active bit copy ``(i, k)`` (``k < p[i]``),
the list of checks it still has to reach, and for every check the list of
bit copies still waiting on it. Each step consumes one entry from each side.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .covers import CoverSpec, CoverWord
from .cycles import EdgeWalk
from .errors import DimensionError, DomainError, InvariantBreach, PreconditionError
from .gf2 import as_binary_matrix
from .tanner import TannerGraph, from_parity_matrix


class HypothesisFailure(NamedTuple):
    kind: str  # "parity" or "inequality"
    check: int
    bit: int | None = None
    detail: str = ""

    def __str__(self):
        where = f"check {self.check + 1}" + ("" if self.bit is None else f", bit {self.bit + 1}")
        return f"{self.kind} hypothesis fails at {where}: {self.detail}"


def check_hypotheses(T: TannerGraph, p) -> tuple[bool, list[HypothesisFailure]]:
    """Parity (even load on each check) and inequality (no bit outweighs the rest of its check)."""
    p = [int(x) for x in p]
    if len(p) != T.num_bits:
        raise DimensionError(f"expected a vector of length {T.num_bits}, got {len(p)}")
    if min(p, default=0) < 0:
        raise DomainError("multiplicities must be nonnegative")
    failures = []
    for j, nb in enumerate(T.check_neighbors):
        load = sum([p[i] for i in nb])
        if load % 2:
            failures.append(HypothesisFailure("parity", j, None, f"load {load} is odd"))
        for i in nb:
            if load - p[i] < p[i]:
                failures.append(
                    HypothesisFailure("inequality", j, i, f"others sum to {load - p[i]} < {p[i]}")
                )
    return not failures, failures


def _first_failure(T: TannerGraph, p: list[int]) -> HypothesisFailure | None:
    """Cheap scan stopping at the first failed hypothesis, in check_hypotheses order."""
    if len(p) != T.num_bits:
        raise DimensionError(f"expected a vector of length {T.num_bits}, got {len(p)}")
    if min(p, default=0) < 0:
        raise DomainError("multiplicities must be nonnegative")
    for j, nb in enumerate(T.check_neighbors):
        vals = [p[i] for i in nb]
        load = sum(vals)
        if load % 2:
            return HypothesisFailure("parity", j, None, f"load {load} is odd")
        if vals and 2 * max(vals) > load:
            i = next(i for i in nb if 2 * p[i] > load)
            return HypothesisFailure("inequality", j, i, f"others sum to {load - p[i]} < {p[i]}")
    return None


@dataclass
class WorkState:
    """Mutable bookkeeping of the path builder.

    ``waiting[j][i]`` lists, in increasing order, the copies ``k`` of bit
    ``i`` still waiting on check ``j``; ``load[j]`` is their total number.
    """

    bit_lists: dict  # (i, k) -> list of checks still to visit
    waiting: dict  # j -> {i: [k, ...]}
    load: dict  # j -> number of bit copies still waiting on j
    used: Counter = field(default_factory=Counter)  # copies of each check opened so far
    paths: list = field(default_factory=list)

    @property
    def check_lists(self) -> dict:
        """j -> list of bit copies (i, k) still waiting, in index order."""
        return {j: [(i, k) for i, ks in w.items() for k in ks] for j, w in self.waiting.items()}

    def m(self, j: int) -> Counter:
        return Counter({i: len(ks) for i, ks in self.waiting[j].items() if ks})

    def invariant_violations(self) -> list[tuple[int, int]]:
        bad = []
        for j in self.waiting:
            counts = self.m(j)
            total = sum(counts.values())
            bad.extend((j, w) for w, c in counts.items() if total - c < c)
        return bad

    def dump(self) -> str:
        return json.dumps(
            {
                "bit_lists": {f"{i + 1},{k + 1}": [j + 1 for j in js] for (i, k), js in sorted(self.bit_lists.items())},
                "check_lists": {
                    str(j + 1): [[i + 1, k + 1] for i, k in xs] for j, xs in sorted(self.check_lists.items())
                },
                "used": {str(j + 1): c for j, c in sorted(self.used.items())},
                "paths_completed": len(self.paths),
            },
            indent=1,
        )


class Realization(NamedTuple):
    cover: CoverSpec
    word: CoverWord
    paths: list


def _initial_state(T: TannerGraph, p) -> WorkState:
    bit_lists = {(i, k): list(T.bit_neighbors[i]) for i in range(T.num_bits) for k in range(p[i])}
    waiting = {j: {i: list(range(p[i])) for i in T.check_neighbors[j]} for j in range(T.num_checks)}
    load = {j: sum(p[i] for i in T.check_neighbors[j]) for j in range(T.num_checks)}
    return WorkState(bit_lists=bit_lists, waiting=waiting, load=load)


def _build_paths(state: WorkState, debug: bool) -> list[list[tuple]]:
    """Greedy path construction; returns each path as a list of lifted edges."""
    bit_lists, waiting, load, used = state.bit_lists, state.waiting, state.load, state.used
    alive = sorted(bit_lists)
    while True:
        # step 1: heaviest bit copy, lowest index on ties
        alive = [key for key in alive if bit_lists[key]]
        if not alive:
            break
        # max keeps the first maximal entry, and alive is sorted
        start = max(alive, key=lambda key: len(bit_lists[key]))
        path = []
        x = start
        while True:
            # step 2: heaviest remaining check of x
            options = bit_lists[x]
            j = options[0]
            for f in options:
                if load[f] > load[j] or (load[f] == load[j] and f < j):
                    j = f
            l = used[j]
            used[j] += 1
            options.remove(j)
            w = waiting[j]
            w[x[0]].remove(x[1])
            load[j] -= 1
            path.append((x, (j, l)))
            # step 3: continue through a different bit of j, the one most present in L(j)
            y, most = None, 0
            for b, ks in w.items():
                if b != x[0] and len(ks) > most:
                    y, most = b, len(ks)
            if y is None:
                raise InvariantBreach(
                    f"no bit other than {x[0] + 1} left at check {j + 1}", state.dump()
                )
            k = min(w[y], key=lambda c: (-len(bit_lists[(y, c)]), c))
            y_copy = (y, k)
            w[y].remove(k)
            load[j] -= 1
            bit_lists[y_copy].remove(j)
            path.append((y_copy, (j, l)))
            if debug:
                bad = state.invariant_violations()
                if bad:
                    raise InvariantBreach(f"loop invariant fails at (check, bit) {bad}", state.dump())
            if not bit_lists[y_copy]:
                break
            x = y_copy
        state.paths.append(path)
    return state.paths


def _walk_from_edges(edges) -> EdgeWalk:
    verts = [("bit", edges[0][0])]
    for s, (b, c) in enumerate(edges):
        verts.append(("check", c) if s % 2 == 0 else ("bit", b))
    return EdgeWalk(edges=tuple(edges), vertices=tuple(verts), kind="path")


def realize(H, p, debug: bool = False) -> Realization:
    """Build a cover, cover codeword and path system realizing ``p``.

    ``H`` may also be a prebuilt TannerGraph. Raises PreconditionError naming
    the failing hypothesis when ``p`` is not an unscaled pseudo-codeword. With
    ``debug`` the builder's loop invariant is re-checked after every step.
    """
    T = H if isinstance(H, TannerGraph) else from_parity_matrix(as_binary_matrix(H))
    p = list(map(int, p))
    failure = _first_failure(T, p)
    if failure is not None:
        raise PreconditionError(str(failure))

    loads = [sum(p[i] for i in nb) for nb in T.check_neighbors]
    M = max([1] + p + [c // 2 for c in loads])

    state = _initial_state(T, p)
    edge_paths = _build_paths(state, debug)

    # complete the cover: fix sigma on the path edges, then pair leftovers in index order
    sigma = {(j, i): [-1] * M for i, j in T.edges}
    for path in edge_paths:
        for (i, k), (j, l) in path:
            sigma[(j, i)][l] = k
    perms = {}
    full = range(M)
    for key, sig in sigma.items():
        taken = set(sig)
        open_l = [l for l in full if sig[l] < 0]
        for l, k in zip(open_l, [k for k in full if k not in taken]):
            sig[l] = k
        perms[key] = tuple(sig)
    cover = CoverSpec._trusted(T, M, perms)

    bits = []
    for i in range(T.num_bits):
        bits.extend([1] * p[i] + [0] * (M - p[i]))
    word = CoverWord._trusted(M, tuple(bits))
    return Realization(cover, word, [_walk_from_edges(e) for e in edge_paths])


class ConclusionCheck(NamedTuple):
    ok: bool
    diagnostics: list

    def __bool__(self):
        return self.ok


def verify_conclusions(cov: CoverSpec, paths, p) -> ConclusionCheck:
    """Check a path system against the cover it claims to live on.

    Conditions: each check copy appears at most once overall; each lifted edge
    at most once; every bit copy has all or none of its edges used; each base
    edge ``(i, j)`` is used exactly ``p[i]`` times. Paths must be genuine,
    backtrackless walks in the cover that start and end at bit copies.
    """
    T, M = cov.base, cov.M
    p = [int(x) for x in p]
    diagnostics = []
    if len(p) != T.num_bits:
        return ConclusionCheck(False, [f"vector length {len(p)} does not match {T.num_bits} bits"])
    cover_edges = set(cov.fiber_edges())

    def endpoints(e):
        (i, k), (j, l) = e
        return ("bit", (i, k)), ("check", (j, l))

    check_seen = Counter()
    edge_seen = Counter()
    for n_path, walk in enumerate(paths, 1):
        for e in walk.edges:
            if e not in cover_edges:
                diagnostics.append(f"path {n_path}: edge {e} is not an edge of the cover")
        if not walk.follows(endpoints):
            diagnostics.append(f"path {n_path}: edges and vertices do not form a walk")
        if not walk.is_backtrackless():
            diagnostics.append(f"path {n_path}: walk backtracks")
        if walk.vertices and (walk.vertices[0][0] != "bit" or walk.vertices[-1][0] != "bit"):
            diagnostics.append(f"path {n_path}: endpoints must be bit copies")
        for v in walk.vertices:
            if v[0] == "check":
                check_seen[v[1]] += 1
        edge_seen.update(walk.edges)

    for c, count in sorted(check_seen.items()):
        if count > 1:
            diagnostics.append(f"C.1: check copy {(c[0] + 1, c[1] + 1)} occurs {count} times")
    for e, count in sorted(edge_seen.items()):
        if count > 1:
            diagnostics.append(f"C.2: edge {e} occurs {count} times")
    by_bit = Counter(b for b, _ in edge_seen)
    for i in range(T.num_bits):
        deg = len(T.bit_neighbors[i])
        for k in range(M):
            used = by_bit.get((i, k), 0)
            if used not in (0, deg):
                diagnostics.append(f"C.3: bit copy {(i + 1, k + 1)} has {used} of {deg} edges in use")
    per_edge = Counter((b[0], c[0]) for b, c in edge_seen)
    for i, j in T.edges:
        if per_edge.get((i, j), 0) != p[i]:
            diagnostics.append(
                f"C.4: base edge (bit {i + 1}, check {j + 1}) lifted {per_edge.get((i, j), 0)} times, expected {p[i]}"
            )
    return ConclusionCheck(not diagnostics, diagnostics)


def paths_to_json(paths) -> list:
    return [
        [{"bit": [i + 1, k + 1], "check": [j + 1, l + 1]} for (i, k), (j, l) in walk.edges]
        for walk in paths
    ]
