"""
Sparse multivariate polynomials with integer coefficients.

A polynomial is a mapping from exponent tuples to nonzero Python ints, so
coefficients never overflow. ``TruncatedSeries`` wraps a polynomial whose
monomials all have total degree at most ``degree`` and truncates every
product accordingly.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .errors import DimensionError, NotInvertibleError, TruncationError

Exponent = tuple[int, ...]


def _grlex(e: Exponent):
    return (sum(e), e)


class SparsePolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise DimensionError(f"exponent {e} has {len(e)} entries, expected {nvars}")
            if any(x < 0 for x in e):
                raise DimensionError(f"negative exponent in {e}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponent: Iterable[int], c: int = 1) -> "SparsePolynomial":
        e = tuple(exponent)
        return cls(len(e), {e: c})

    def _check(self, other):
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(self.nvars, int(other))
        if other.nvars != self.nvars:
            raise DimensionError(f"variable counts differ: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other, max_degree: int | None = None) -> "SparsePolynomial":
        """Product, dropping monomials of total degree above ``max_degree``."""
        other = self._check(other)
        out = defaultdict(int)
        b_items = sorted(other.terms.items(), key=lambda t: sum(t[0]))
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, cb in b_items:
                if max_degree is not None and da + sum(eb) > max_degree:
                    break
                out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
        return SparsePolynomial(self.nvars, out)

    def __pow__(self, k: int):
        out = SparsePolynomial.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.nvars, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, e: Iterable[int]) -> int:
        return self.terms.get(tuple(e), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=0)

    def truncate(self, max_degree: int) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def items(self):
        """Terms in graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]))

    def support(self) -> list[Exponent]:
        return [e for e, _ in self.items()]

    def substitute(self, images: list[Exponent | None]) -> "SparsePolynomial":
        """Monomial substitution: variable ``t`` becomes the monomial ``images[t]`` (None means 1)."""
        if len(images) != self.nvars:
            raise DimensionError("one image per variable is required")
        m = next((len(im) for im in images if im is not None), 0)
        out = defaultdict(int)
        for e, c in self.terms.items():
            new = [0] * m
            for t, x in enumerate(e):
                if x and images[t] is not None:
                    for s, y in enumerate(images[t]):
                        new[s] += x * y
            out[tuple(new)] += c
        return SparsePolynomial(m, out)

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data, nvars: int | None = None) -> "SparsePolynomial":
        if nvars is None:
            nvars = len(data[0]["exponents"]) if data else 0
        return cls(nvars, [(tuple(t["exponents"]), int(t["coeff"])) for t in data])

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.format()!r})"

    def format(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"u{t + 1}" for t in range(self.nvars)]
        parts = []
        for e, c in self.items():
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f"{sign} {body}"))
        return " ".join(parts)


class TruncatedSeries:
    """Power series known up to (and including) total degree ``degree``."""

    __slots__ = ("poly", "degree")

    def __init__(self, poly: SparsePolynomial, degree: int):
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.poly = poly.truncate(degree)
        self.degree = degree

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            D = min(self.degree, other.degree)
            other = other.poly
        else:
            D = self.degree
        return TruncatedSeries(self.poly.mul(other, D), D)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.poly + other.poly, min(self.degree, other.degree))
        return TruncatedSeries(self.poly + other, self.degree)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree == other.degree and self.poly == other.poly

    def coefficient(self, e: Iterable[int]) -> int:
        e = tuple(e)
        if len(e) != self.nvars:
            raise DimensionError(f"exponent has {len(e)} entries, expected {self.nvars}")
        if sum(e) > self.degree:
            raise TruncationError(f"total degree {sum(e)} is beyond the truncation degree {self.degree}")
        return self.poly.coefficient(e)

    def support(self) -> list[Exponent]:
        return self.poly.support()

    def items(self):
        return self.poly.items()

    def __len__(self):
        return len(self.poly)

    def to_json(self) -> dict:
        return {"degree": self.degree, "terms": self.poly.to_json()}

    def __repr__(self):
        return f"TruncatedSeries({self.poly.format()} + O(deg {self.degree + 1}))"


class Packing:
    """Exponent vectors packed into one int, total degree in the top field.

    With every exponent at most ``max_degree`` the fields never carry, so
    multiplying monomials is integer addition and the degree is one shift.
    """

    def __init__(self, nvars: int, max_degree: int):
        self.nvars = nvars
        self.width = max(1, int(max_degree).bit_length())
        self.shift = self.width * nvars
        self.mask = (1 << self.width) - 1

    def pack(self, e: Exponent) -> int:
        key = sum(e) << self.shift
        for t, x in enumerate(e):
            key |= x << (self.width * t)
        return key

    def unpack(self, key: int) -> Exponent:
        return tuple((key >> (self.width * t)) & self.mask for t in range(self.nvars))

    def degree(self, key: int) -> int:
        return key >> self.shift

    def variable(self, t: int) -> int:
        return (1 << self.shift) | (1 << (self.width * t))

    def to_poly(self, packed: dict) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {self.unpack(k): c for k, c in packed.items() if c})


def packed_mul(a: dict, b_sorted: list, shift: int, max_degree: int) -> dict:
    """Truncated product of packed polynomials; ``b_sorted`` is ascending in key (hence degree)."""
    out = defaultdict(int)
    limit = (max_degree + 1) << shift
    for ka, ca in a.items():
        room = limit - ka
        for kb, cb in b_sorted:
            if kb >= room:
                break
            out[ka + kb] += ca * cb
    return {k: c for k, c in out.items() if c}


def series_inverse(f: SparsePolynomial, degree: int) -> TruncatedSeries:
    """``1/f`` modulo monomials of total degree above ``degree``; needs ``f(0) = 1``.

    Sums the geometric series in ``g = 1 - f`` term by term.
    """
    if f.constant_term() != 1:
        raise NotInvertibleError(f"constant term is {f.constant_term()}, expected 1")
    pk = Packing(f.nvars, degree)
    g = sorted(
        (pk.pack(e), -c) for e, c in f.terms.items() if any(e) and sum(e) <= degree
    )
    total = defaultdict(int, {0: 1})
    power = {0: 1}
    while True:
        power = packed_mul(power, g, pk.shift, degree)
        if not power:
            break
        for k, c in power.items():
            total[k] += c
    return TruncatedSeries(pk.to_poly(total), degree)
