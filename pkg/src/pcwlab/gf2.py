"""
Linear algebra over GF(2) on dense numpy 0/1 arrays.

Matrices and vectors are plain ``numpy.uint8`` arrays; the helpers below
validate and normalize whatever array-like the caller hands in. Everything
here is brute force and meant for desk-scale codes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DimensionError, DomainError

DEFAULT_MAX_DIMENSION = 24


def as_binary_matrix(H) -> np.ndarray:
    A = np.array(H, dtype=np.int64, copy=True)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    if A.ndim != 2:
        raise DimensionError(f"parity-check matrix must be 2-D, got shape {A.shape}")
    if A.size and not np.isin(A, (0, 1)).all():
        raise DomainError("parity-check matrix entries must be 0 or 1")
    return A.astype(np.uint8)


def as_bit_vector(x, n: int | None = None) -> np.ndarray:
    v = np.array(x, dtype=np.int64).reshape(-1)
    if n is not None and v.size != n:
        raise DimensionError(f"expected a vector of length {n}, got {v.size}")
    if v.size and not np.isin(v, (0, 1)).all():
        raise DomainError("bit vector entries must be 0 or 1")
    return v.astype(np.uint8)


def syndrome(H, x) -> np.ndarray:
    """Return ``H x^T`` over GF(2); zero iff ``x`` is a codeword."""
    H = as_binary_matrix(H)
    x = as_bit_vector(x, H.shape[1])
    return ((H.astype(np.int64) @ x.astype(np.int64)) % 2).astype(np.uint8)


def is_codeword(H, x) -> bool:
    return not syndrome(H, x).any()


def row_reduce(H) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2) and the pivot columns.

    Pivots are taken as the first row (in current order) carrying a one in
    the column, so the result is deterministic.
    """
    A = as_binary_matrix(H).copy()
    m, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        hits = np.nonzero(A[row:, col])[0]
        if hits.size == 0:
            continue
        piv = row + hits[0]
        if piv != row:
            A[[row, piv]] = A[[piv, row]]
        others = np.nonzero(A[:, col])[0]
        for r in others:
            if r != row:
                A[r] ^= A[row]
        pivots.append(col)
        row += 1
    return A, pivots


def rank(H) -> int:
    return len(row_reduce(H)[1])


def nullspace_basis(H) -> np.ndarray:
    """Basis of the GF(2) null space of ``H``, one vector per row."""
    R, pivots = row_reduce(H)
    n = R.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for r, p in enumerate(pivots):
            basis[b, p] = R[r, f]
    return basis


@dataclass(frozen=True)
class CodeDescription:
    parity: np.ndarray
    dimension: int
    nullspace_basis: np.ndarray

    @property
    def length(self) -> int:
        return self.parity.shape[1]


def describe_code(H) -> CodeDescription:
    H = as_binary_matrix(H)
    basis = nullspace_basis(H)
    return CodeDescription(parity=H, dimension=basis.shape[0], nullspace_basis=basis)


def span(vectors, n: int | None = None, max_dimension: int = DEFAULT_MAX_DIMENSION) -> np.ndarray:
    """All GF(2) combinations of ``vectors``, deduplicated, lexicographically sorted."""
    V = np.array(vectors, dtype=np.int64)
    if V.size == 0:
        if n is None:
            raise DimensionError("length of an empty span must be given explicitly")
        return np.zeros((1, n), dtype=np.uint8)
    V = V.reshape(len(V), -1) % 2
    # reduce first so the enumeration is over an independent set
    R, pivots = row_reduce(V)
    R = R[: len(pivots)]
    k = len(pivots)
    if k > max_dimension:
        raise CapacityError(
            f"span has dimension {k}, above max_dimension={max_dimension}",
            bound="max_dimension",
            limit=max_dimension,
        )
    coeffs = (np.arange(1 << k, dtype=np.int64)[:, None] >> np.arange(k)) & 1
    words = (coeffs @ R.astype(np.int64)) % 2
    return np.unique(words.astype(np.uint8), axis=0)


def enumerate_codewords(H, max_dimension: int = DEFAULT_MAX_DIMENSION) -> np.ndarray:
    """Every codeword of the null space of ``H`` as the rows of a sorted array.

    Raises CapacityError when ``n - rank(H)`` exceeds ``max_dimension``.
    """
    H = as_binary_matrix(H)
    n = H.shape[1]
    basis = nullspace_basis(H)
    if basis.shape[0] > max_dimension:
        raise CapacityError(
            f"code dimension {basis.shape[0]} exceeds max_dimension={max_dimension}",
            bound="max_dimension",
            limit=max_dimension,
        )
    if basis.shape[0] == 0:
        return np.zeros((1, n), dtype=np.uint8)
    return span(basis, n, max_dimension)


@dataclass(frozen=True)
class DecodeResult:
    codeword: np.ndarray
    distance: int
    unique: bool


def ml_decode_bsc(H, y, max_dimension: int = DEFAULT_MAX_DIMENSION) -> DecodeResult:
    """Maximum-likelihood decoding on the BSC by exhaustive search.

    Returns the lexicographically least codeword at minimum Hamming distance
    from ``y`` and whether that minimizer is unique.
    """
    H = as_binary_matrix(H)
    y = as_bit_vector(y, H.shape[1])
    words = enumerate_codewords(H, max_dimension)
    dist = (words != y).sum(axis=1)
    best = int(dist.min())
    hits = np.nonzero(dist == best)[0]
    # rows are sorted, so the first hit is the lexicographic minimum
    return DecodeResult(codeword=words[hits[0]].copy(), distance=best, unique=hits.size == 1)


def hamming_distance(x, y) -> int:
    x = as_bit_vector(x)
    y = as_bit_vector(y, x.size)
    return int((x != y).sum())
