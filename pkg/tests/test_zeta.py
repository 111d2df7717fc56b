import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcwlab.cycles import backtrackless_tailless_closed_walks
from pcwlab.errors import CapacityError, NotACycleCodeError, NotBitEvenError
from pcwlab.poly import SparsePolynomial
from pcwlab.tanner import MultiGraph, duplicate_checks, from_parity_matrix
from pcwlab.zeta import (
    bit_even_pcw,
    block_labels,
    directed_edge_matrix,
    enumerate_cycle_pcw,
    project_block_constant,
    zeta_reciprocal,
    zeta_series,
)
from tests.helpers import DUMBBELL, H0, random_connected_multigraph

TRIANGLE = MultiGraph(num_vertices=3, edges=((0, 1), (1, 2), (0, 2)))


def exact_det(A):
    """Fraction Gaussian elimination, independent of the Laplace expansion."""
    A = [[Fraction(x) for x in row] for row in A]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


def evaluate(f: SparsePolynomial, point):
    total = 0
    for e, c in f.terms.items():
        term = c
        for x, k in zip(point, e):
            term *= x**k
        total += term
    return total


def numeric_reciprocal(G: MultiGraph, point):
    """det(I - U M) at a point, with U built from the edge values."""
    Mtx = directed_edge_matrix(G)
    m = G.num_edges
    u = [point[d % m] for d in range(2 * m)]
    A = [[(1 if a == b else 0) - u[a] * int(Mtx[a, b]) for b in range(2 * m)] for a in range(2 * m)]
    return exact_det(A)


def test_triangle_is_a_squared_binomial():
    x = SparsePolynomial.monomial((1, 1, 1))
    assert zeta_reciprocal(TRIANGLE, debug=True) == (1 - x) ** 2


def test_tree_has_trivial_zeta():
    path = MultiGraph(num_vertices=3, edges=((0, 1), (1, 2)))
    assert zeta_reciprocal(path) == SparsePolynomial.constant(2)


def test_directed_edge_matrix_of_triangle():
    A = directed_edge_matrix(TRIANGLE)
    # every directed edge has exactly one non-backtracking successor
    assert (A.sum(axis=1) == 1).all() and (A.sum(axis=0) == 1).all()


def test_capacity_names_the_bound():
    with pytest.raises(CapacityError) as err:
        zeta_reciprocal(TRIANGLE, max_directed=4)
    assert err.value.bound == "max_directed" and err.value.limit == 4


def test_pipeline_preconditions():
    with pytest.raises(NotACycleCodeError):
        enumerate_cycle_pcw(H0, 4)
    with pytest.raises(NotBitEvenError):
        bit_even_pcw(H0, 4)


def test_block_labels_and_projection():
    T = from_parity_matrix(duplicate_checks(H0))
    labels = block_labels(T)
    assert [i for i, _ in labels] == [i for i, _ in T.edges]
    assert all(k < len(T.bit_neighbors[i]) for i, k in labels)
    const = tuple(2 for _ in labels)
    broken = tuple(1 if k == 0 else 0 for _, k in labels)
    assert project_block_constant(T, [const, broken]) == [(2, 2, 2)]


def test_dumbbell_bit_even_projection_matches_cycle_pipeline():
    assert bit_even_pcw(DUMBBELL, 20) == enumerate_cycle_pcw(DUMBBELL, 10)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_reciprocal_matches_numeric_determinant(seed):
    rng = random.Random(seed)
    G = random_connected_multigraph(rng, 6)
    f = zeta_reciprocal(G, debug=True)
    for _ in range(3):
        point = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(G.num_edges)]
        assert evaluate(f, point) == numeric_reciprocal(G, point)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_coefficients_count_walk_unions(seed):
    rng = random.Random(seed)
    G = random_connected_multigraph(rng, 6)
    series = zeta_series(G, 8, max_directed=12)
    assert dict(series.items()) == dict(backtrackless_tailless_closed_walks(G, 8))


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_coefficients_are_nonnegative_and_support_is_even(seed):
    rng = random.Random(seed)
    G = random_connected_multigraph(rng, 6)
    series = zeta_series(G, 8, max_directed=12)
    inc = np.zeros((G.num_vertices, G.num_edges), dtype=int)
    for t, (a, b) in enumerate(G.edges):
        inc[a, t] = inc[b, t] = 1
    for e, c in series.items():
        assert c > 0
        assert not (inc @ np.array(e) % 2).any()
