"""
Finite M-covers of Tanner graphs.

A cover is stored as one permutation per base edge: ``perms[(j, i)][l] == k``
means check copy ``(j, l)`` is joined to bit copy ``(i, k)``. Words on the
cover are laid out block by block, the ``M`` copies of bit ``i`` occupying
positions ``i*M .. i*M + M - 1``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionError, DomainError
from .gf2 import DEFAULT_MAX_DIMENSION, as_bit_vector, enumerate_codewords
from .tanner import TannerGraph

RNG_ALGORITHM = "python-random-mt19937/fisher-yates"


@dataclass(frozen=True)
class CoverSpec:
    base: TannerGraph
    M: int
    perms: dict

    def __post_init__(self):
        if self.M < 1:
            raise DomainError("cover degree M must be at least 1")
        perms = {(int(j), int(i)): tuple(int(k) for k in p) for (j, i), p in self.perms.items()}
        wanted = {(j, i) for i, j in self.base.edges}
        if set(perms) != wanted:
            raise DomainError("cover permutations must be given for exactly the base edges")
        for key, p in perms.items():
            if sorted(p) != list(range(self.M)):
                raise DomainError(f"assignment for edge {key} is not a permutation of 0..{self.M - 1}")
        object.__setattr__(self, "perms", perms)

    def __hash__(self):
        return hash((self.base, self.M, tuple(sorted(self.perms.items()))))

    @classmethod
    def _trusted(cls, base: TannerGraph, M: int, perms: dict) -> "CoverSpec":
        """Skip validation; for builders whose output is correct by construction."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "M", M)
        object.__setattr__(obj, "perms", perms)
        return obj

    def fiber_edges(self):
        """All lifted edges as ``((i, k), (j, l))`` pairs."""
        for (j, i), p in sorted(self.perms.items()):
            for l, k in enumerate(p):
                yield (i, k), (j, l)

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "edges": [
                {"check": j + 1, "bit": i + 1, "perm": [k + 1 for k in p]}
                for (j, i), p in sorted(self.perms.items())
            ],
        }

    @classmethod
    def from_json(cls, base: TannerGraph, data) -> "CoverSpec":
        if isinstance(data, str):
            data = json.loads(data)
        perms = {
            (e["check"] - 1, e["bit"] - 1): tuple(k - 1 for k in e["perm"]) for e in data["edges"]
        }
        return cls(base=base, M=int(data["M"]), perms=perms)


@dataclass(frozen=True)
class CoverWord:
    M: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in np.asarray(self.bits).reshape(-1))
        if self.M < 1 or len(bits) % self.M:
            raise DimensionError(f"word length {len(bits)} is not a multiple of M={self.M}")
        if any(b not in (0, 1) for b in bits):
            raise DomainError("cover word entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def _trusted(cls, M: int, bits: tuple) -> "CoverWord":
        obj = object.__new__(cls)
        object.__setattr__(obj, "M", M)
        object.__setattr__(obj, "bits", bits)
        return obj

    @property
    def n(self) -> int:
        return len(self.bits) // self.M

    def block(self, i: int) -> tuple[int, ...]:
        return self.bits[i * self.M : (i + 1) * self.M]

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    def __str__(self):
        return "(" + ", ".join(":".join(map(str, self.block(i))) for i in range(self.n)) + ")"


def trivial_cover(T: TannerGraph, M: int = 1) -> CoverSpec:
    ident = tuple(range(M))
    return CoverSpec(base=T, M=M, perms={(j, i): ident for i, j in T.edges})


def lifted_parity_matrix(cov: CoverSpec) -> np.ndarray:
    T, M = cov.base, cov.M
    Ht = np.zeros((T.num_checks * M, T.num_bits * M), dtype=np.uint8)
    for (i, k), (j, l) in cov.fiber_edges():
        Ht[j * M + l, i * M + k] = 1
    return Ht


def lift_codeword(c, M: int) -> CoverWord:
    c = as_bit_vector(c)
    return CoverWord(M=M, bits=tuple(np.repeat(c, M).tolist()))


def is_cover_codeword(cov: CoverSpec, w: CoverWord) -> bool:
    if w.M != cov.M or w.n != cov.base.num_bits:
        raise DimensionError(
            f"word has M={w.M}, n={w.n}; cover has M={cov.M}, n={cov.base.num_bits}"
        )
    M, bits = cov.M, w.bits
    parity = [0] * (cov.base.num_checks * M)
    for (j, i), perm in cov.perms.items():
        for l, k in enumerate(perm):
            parity[j * M + l] ^= bits[i * M + k]
    return not any(parity)


def pseudo_codeword(w: CoverWord) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    """Unscaled (ones per block) and normalized (divided by M) pseudo-codeword."""
    unscaled = tuple(sum(w.block(i)) for i in range(w.n))
    return unscaled, tuple(Fraction(p, w.M) for p in unscaled)


def scaled_cover_distance(w1: CoverWord, w2: CoverWord) -> Fraction:
    if w1.M != w2.M or len(w1.bits) != len(w2.bits):
        raise DimensionError("words must have the same M and length")
    return Fraction(sum(a != b for a, b in zip(w1.bits, w2.bits)), w1.M)


def random_cover(T: TannerGraph, M: int, seed: int) -> CoverSpec:
    """Cover with an independent uniform permutation on every edge.

    Edges are visited in sorted ``(check, bit)`` order and each permutation
    is a Fisher-Yates shuffle drawn from a generator seeded by ``seed``.
    """
    if M < 1:
        raise DomainError("cover degree M must be at least 1")
    rng = random.Random(seed)
    perms = {}
    for key in sorted((j, i) for i, j in T.edges):
        p = list(range(M))
        rng.shuffle(p)
        perms[key] = tuple(p)
    return CoverSpec(base=T, M=M, perms=perms)


def cover_codewords(cov: CoverSpec, max_dimension: int = DEFAULT_MAX_DIMENSION) -> list[CoverWord]:
    words = enumerate_codewords(lifted_parity_matrix(cov), max_dimension)
    return [CoverWord(M=cov.M, bits=tuple(row.tolist())) for row in words]


def check_cover_structure(cov: CoverSpec) -> list[str]:
    """Structural validation from the lifted graph itself; returns problems found.

    Each copy of a vertex must see exactly one copy of every base neighbour.
    """
    T, M = cov.base, cov.M
    bit_nbrs = {(i, k): [] for i in range(T.num_bits) for k in range(M)}
    check_nbrs = {(j, l): [] for j in range(T.num_checks) for l in range(M)}
    for (i, k), (j, l) in cov.fiber_edges():
        bit_nbrs[(i, k)].append(j)
        check_nbrs[(j, l)].append(i)
    problems = []
    for (i, k), js in bit_nbrs.items():
        if sorted(js) != list(T.bit_neighbors[i]):
            problems.append(f"bit copy {(i + 1, k + 1)} does not cover the neighbourhood of bit {i + 1}")
    for (j, l), is_ in check_nbrs.items():
        if sorted(is_) != list(T.check_neighbors[j]):
            problems.append(f"check copy {(j + 1, l + 1)} does not cover the neighbourhood of check {j + 1}")
    return problems


def shuffle_fibers(cov: CoverSpec, w: CoverWord, bit_perms) -> tuple[CoverSpec, CoverWord]:
    """Relabel the copies of each bit and return the matching cover and word.

    ``bit_perms[i]`` is a permutation ``tau`` of ``0..M-1``; the new word reads
    ``w'[(i, k)] = w[(i, tau(k))]`` and the new cover uses ``tau^-1 o sigma``.
    """
    M = cov.M
    inverse = []
    for tau in bit_perms:
        inv = [0] * M
        for k, t in enumerate(tau):
            inv[t] = k
        inverse.append(inv)
    perms = {(j, i): tuple(inverse[i][s] for s in p) for (j, i), p in cov.perms.items()}
    bits = []
    for i in range(w.n):
        blk = w.block(i)
        bits.extend(blk[bit_perms[i][k]] for k in range(M))
    return CoverSpec(base=cov.base, M=M, perms=perms), CoverWord(M=M, bits=tuple(bits))
