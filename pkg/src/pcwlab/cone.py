"""
The fundamental cone of a parity-check matrix.

A vector ``v`` lies in the cone when ``v >= 0`` and, for every check ``j`` and
every bit ``i`` in it, the other bits of the check sum to at least ``v[i]``.
All decisions use exact rationals; there is no tolerance anywhere.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, DomainError, PreconditionError
from .gf2 import as_binary_matrix


class ConeVerdict(NamedTuple):
    member: bool
    violated: list  # (check j, bit i) pairs whose inequality fails
    negative: list  # bits with a negative entry

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "violated": [{"row": j + 1, "bit": i + 1} for j, i in self.violated],
            "negative": [i + 1 for i in self.negative],
        }


def as_rational_vector(v, n: int | None = None) -> tuple[Fraction, ...]:
    v = list(v)
    if any(isinstance(x, (float, np.floating)) for x in v):
        raise DomainError("floating point entries are not accepted; pass integers, Fractions or 'p/q' strings")
    out = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in v)
    if n is not None and len(out) != n:
        raise DimensionError(f"expected a vector of length {n}, got {len(out)}")
    return out


def cone_membership(H, v) -> ConeVerdict:
    H = as_binary_matrix(H)
    r, n = H.shape
    v = as_rational_vector(v, n)
    negative = [i for i, x in enumerate(v) if x < 0]
    violated = []
    for j in range(r):
        support = np.nonzero(H[j])[0].tolist()
        total = sum((v[i] for i in support), Fraction(0))
        for i in support:
            if total - v[i] < v[i]:
                violated.append((j, i))
    return ConeVerdict(not negative and not violated, violated, negative)


def in_cone(H, v) -> bool:
    return cone_membership(H, v).member


def is_unscaled_pcw(H, p) -> bool:
    """Integer point of the cone whose reduction mod 2 is a codeword."""
    H = as_binary_matrix(H)
    p = [int(x) for x in p]
    if len(p) != H.shape[1]:
        raise DimensionError(f"expected a vector of length {H.shape[1]}, got {len(p)}")
    if any(x < 0 for x in p):
        raise DomainError("pseudo-codeword candidates must be nonnegative")
    # exact integer arithmetic: even load on each check, no entry above half of it
    for row in H.tolist():
        vals = [x for x, h in zip(p, row) if h]
        load = sum(vals)
        if load % 2 or (vals and 2 * max(vals) > load):
            return False
    return True


def pcw_mask(H, P) -> np.ndarray:
    """Vectorized pseudo-codeword test for the nonnegative integer rows of ``P``."""
    H = as_binary_matrix(H).astype(np.int64)
    P = np.asarray(P, dtype=np.int64)
    if P.ndim != 2 or P.shape[1] != H.shape[1]:
        raise DimensionError(f"expected rows of length {H.shape[1]}")
    sums = P @ H.T
    ok = (P >= 0).all(axis=1) & ((sums % 2) == 0).all(axis=1)
    for j in range(H.shape[0]):
        support = np.nonzero(H[j])[0]
        if support.size:
            ok &= (2 * P[:, support] <= sums[:, [j]]).all(axis=1)
    return ok


def integer_box(n: int, max_entry: int) -> np.ndarray:
    grids = np.meshgrid(*[np.arange(max_entry + 1)] * n, indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1) if n else np.zeros((1, 0), dtype=np.int64)


def integer_simplex(n: int, max_total: int) -> np.ndarray:
    """All nonnegative integer vectors of length ``n`` with entry sum at most ``max_total``."""
    rows = []
    for total in range(max_total + 1):
        # stars and bars
        for bars in itertools.combinations(range(total + n - 1), n - 1):
            prev = -1
            vec = []
            for b in bars:
                vec.append(b - prev - 1)
                prev = b
            vec.append(total + n - 1 - prev - 1)
            rows.append(vec)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(-1, n)


def scan_unscaled_pcw(H, max_total: int | None = None, max_entry: int | None = None) -> list[tuple[int, ...]]:
    """Exhaustive list of pseudo-codewords in a simplex or box, graded-lex sorted."""
    H = as_binary_matrix(H)
    n = H.shape[1]
    if max_total is not None:
        P = integer_simplex(n, max_total)
        if max_entry is not None:
            P = P[(P <= max_entry).all(axis=1)]
    elif max_entry is not None:
        P = integer_box(n, max_entry)
    else:
        raise ValueError("give max_total or max_entry")
    hits = P[pcw_mask(H, P)]
    return sorted((tuple(int(x) for x in row) for row in hits), key=lambda v: (sum(v), v))


class RayWitness(NamedTuple):
    p: tuple[int, ...]
    alpha: Fraction
    beta: int


def squared_distance(alpha: Fraction, p, v) -> Fraction:
    return sum(((alpha * a - b) ** 2 for a, b in zip(p, v)), Fraction(0))


def dense_ray_witness(H, v, eps) -> RayWitness:
    """Even pseudo-codeword whose ray passes within ``eps`` of the cone point ``v``.

    Uses ``p_i = 2 * ceil(beta * v_i)``, doubling ``beta`` from 1 until
    ``|alpha p - v| < eps`` holds exactly for the least-squares ``alpha``.
    """
    H = as_binary_matrix(H)
    n = H.shape[1]
    v = as_rational_vector(v, n)
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if not cone_membership(H, v).member:
        raise PreconditionError("vector is not in the fundamental cone")
    if not any(v):
        return RayWitness(p=(0,) * n, alpha=Fraction(1), beta=1)
    beta = 1
    while True:
        p = tuple(2 * math.ceil(beta * x) for x in v)
        alpha = Fraction(sum(a * b for a, b in zip(p, v)), sum(a * a for a in p))
        if squared_distance(alpha, p, v) < eps * eps:
            return RayWitness(p=p, alpha=alpha, beta=beta)
        beta *= 2
