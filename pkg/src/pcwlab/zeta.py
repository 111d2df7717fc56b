"""
Edge zeta functions of graphs and the pseudo-codewords they enumerate.

The reciprocal of the edge zeta function is ``det(I - U M)`` with ``M`` the
directed edge matrix and ``U`` the diagonal of edge variables (each variable
appears twice, once per orientation). The determinant is expanded exactly
over the integers; nonzero coefficients of the inverted series pick out the
pseudo-codewords.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .cycles import DirectedEdges, graded_lex_key
from .errors import CapacityError, NotACycleCodeError, NotBitEvenError
from .gf2 import as_binary_matrix
from .poly import Packing, SparsePolynomial, TruncatedSeries, series_inverse
from .tanner import (
    MultiGraph,
    TannerGraph,
    from_parity_matrix,
    is_bit_even,
    is_cycle_code,
    normal_graph,
    tanner_as_multigraph,
)

DEFAULT_MAX_DIRECTED = 24


def directed_edge_matrix(G: MultiGraph) -> np.ndarray:
    """``m[a, b] = 1`` iff directed edge ``a`` feeds into ``b`` without backtracking."""
    D = DirectedEdges(G)
    size = 2 * G.num_edges
    A = np.zeros((size, size), dtype=np.int64)
    for a in range(size):
        for b in D.succ[a]:
            A[a, b] = 1
    return A


def _row_order(rows: list[dict]) -> list[int]:
    """Greedy elimination order keeping the set of half-processed columns small."""
    size = len(rows)
    col_rows = defaultdict(set)
    for r, row in enumerate(rows):
        for c in row:
            col_rows[c].add(r)
    remaining = set(range(size))
    open_cols: set[int] = set()
    order = []
    while remaining:
        best, best_key = None, None
        for r in remaining:
            touched = open_cols | set(rows[r])
            closing = {c for c in touched if col_rows[c] <= set(order) | {r}}
            key = (len(touched - closing), r)
            if best_key is None or key < best_key:
                best, best_key = r, key
        order.append(best)
        remaining.discard(best)
        open_cols = {c for c in open_cols | set(rows[best]) if not col_rows[c] <= set(order)}
    return order


def _laplace_det(rows: list[dict[int, tuple[int, int]]], nvars: int, max_degree: int | None) -> SparsePolynomial:
    """Determinant of a matrix whose entries are signed monomials.

    ``rows[r]`` maps column -> (coefficient, variable or -1 for a constant).
    Rows are expanded one at a time, memoizing partial sums on the set of
    columns already used; a state is dropped as soon as some column has no
    unprocessed row left yet is unused. With ``max_degree`` partial products
    above that degree are dropped, which is safe because every entry has
    degree 0 or 1.
    """
    size = len(rows)
    order = _row_order(rows)
    # sign of the row permutation
    row_sign = 1
    for a in range(size):
        for b in range(a + 1, size):
            if order[a] > order[b]:
                row_sign = -row_sign
    last_use = {}
    for step, r in enumerate(order):
        for c in rows[r]:
            last_use[c] = step
    closing = defaultdict(int)
    for c, step in last_use.items():
        closing[step] |= 1 << c

    D = max_degree if max_degree is not None else size
    pk = Packing(nvars, D)
    limit = (D + 1) << pk.shift
    states = {0: {0: row_sign}}
    for step, r in enumerate(order):
        entries = [(c, coef, pk.variable(var) if var >= 0 else 0) for c, (coef, var) in rows[r].items()]
        must = closing[step]
        nxt = defaultdict(lambda: defaultdict(int))
        for mask, poly in states.items():
            for col, coef, key in entries:
                bit = 1 << col
                if mask & bit:
                    continue
                new_mask = mask | bit
                if new_mask & must != must:
                    continue
                # inversions added by placing col after the columns already used
                sign = -coef if bin(mask >> (col + 1)).count("1") & 1 else coef
                target = nxt[new_mask]
                for k, c in poly.items():
                    k2 = k + key
                    if k2 < limit:
                        target[k2] += sign * c
        states = {}
        for mask, poly in nxt.items():
            poly = {k: c for k, c in poly.items() if c}
            if poly:
                states[mask] = poly
        if not states:
            return SparsePolynomial(nvars)
    (poly,) = states.values()
    return pk.to_poly(poly)


def _i_minus(G: MultiGraph, left: bool) -> list[dict[int, tuple[int, int]]]:
    """Rows of ``I - U M`` (``left``) or ``I - M U``."""
    D = DirectedEdges(G)
    size = 2 * G.num_edges
    rows = []
    for a in range(size):
        row = {a: (1, -1)}
        for b in D.succ[a]:
            var = D.edge(a) if left else D.edge(b)
            # no loops, so b != a and the diagonal stays 1
            row[b] = (-1, var)
        rows.append(row)
    return rows


def zeta_reciprocal(
    G: MultiGraph,
    max_directed: int = DEFAULT_MAX_DIRECTED,
    max_degree: int | None = None,
    debug: bool = False,
) -> SparsePolynomial:
    """Exact ``det(I - U M)`` in one variable per edge of ``G``.

    ``max_degree`` keeps only monomials up to that total degree (the series
    inverse to that degree is unaffected). ``debug`` also expands
    ``det(I - M U)`` and asserts equality.
    """
    size = 2 * G.num_edges
    if size > max_directed:
        raise CapacityError(
            f"{size} directed edges exceed max_directed={max_directed}",
            bound="max_directed",
            limit=max_directed,
        )
    m = G.num_edges
    if m == 0:
        return SparsePolynomial.constant(0)
    det = _laplace_det(_i_minus(G, left=True), m, max_degree)
    if debug:
        other = _laplace_det(_i_minus(G, left=False), m, max_degree)
        assert det == other, "det(I - UM) and det(I - MU) disagree"
    return det


def series_expand(f: SparsePolynomial, D: int) -> TruncatedSeries:
    return series_inverse(f, D)


def coefficient_of(s: TruncatedSeries, e) -> int:
    return s.coefficient(e)


def zeta_series(G: MultiGraph, D: int, max_directed: int = DEFAULT_MAX_DIRECTED) -> TruncatedSeries:
    return series_expand(zeta_reciprocal(G, max_directed, max_degree=D), D)


def enumerate_cycle_pcw(H, D: int, max_directed: int = DEFAULT_MAX_DIRECTED) -> list[tuple[int, ...]]:
    """Exponent vectors of the zeta series of the normal graph, up to total degree ``D``."""
    T = from_parity_matrix(H)
    if not is_cycle_code(T):
        raise NotACycleCodeError("every bit must have degree 2 for the cycle-code pipeline")
    series = zeta_series(normal_graph(T), D, max_directed)
    return sorted(series.support(), key=graded_lex_key)


def block_labels(T: TannerGraph) -> list[tuple[int, int]]:
    """Label of each Tanner edge as ``(bit, position within the bit's block)``."""
    seen = defaultdict(int)
    labels = []
    for i, _ in T.edges:
        labels.append((i, seen[i]))
        seen[i] += 1
    return labels


def project_block_constant(T: TannerGraph, exponents) -> list[tuple[int, ...]]:
    """Keep exponent vectors constant on each bit's block of edges; read one entry per bit."""
    labels = block_labels(T)
    out = []
    for e in exponents:
        per_bit = {}
        ok = True
        for (i, _), x in zip(labels, e):
            if per_bit.setdefault(i, x) != x:
                ok = False
                break
        if ok:
            out.append(tuple(per_bit.get(i, 0) for i in range(T.num_bits)))
    return sorted(set(out), key=graded_lex_key)


def bit_even_pcw(H, D: int, max_directed: int = 32) -> list[tuple[int, ...]]:
    """Pseudo-codewords from the edge zeta function of a bit-even Tanner graph.

    ``D`` bounds the total degree in the per-edge variables. Bits of degree 0
    carry no variable and project to 0.
    """
    H = as_binary_matrix(H)
    T = from_parity_matrix(H)
    if not is_bit_even(T):
        raise NotBitEvenError("Tanner graph is not bit-even; apply duplicate_checks first")
    G = tanner_as_multigraph(T)
    series = zeta_series(G, D, max_directed)
    return project_block_constant(T, series.support())
