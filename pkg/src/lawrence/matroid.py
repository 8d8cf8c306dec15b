"""Vector configurations, their matroids and quotient configurations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import EmptyConfig, NotGenerating, SizeGuard, ZeroVector
from .intlinalg import (
    IntMatrix,
    lattice_complement,
    primitive_part,
    rank_of_vectors,
    saturate_span,
    smith_divisors,
)
from .polynomial import IntPolynomial

DEFAULT_MAX_SUBSETS = 16


@dataclass(frozen=True)
class Config:
    """Indexed configuration ``b_1..b_n`` in ``Z^rank`` with ``b_i = a_i v_i``.

    Use :func:`validate_config` for user input; the bare constructor is
    also used for quotient configurations, which may have rank 0.
    """

    rank: int
    vectors: tuple[tuple[int, ...], ...]
    multipliers: tuple[int, ...]
    primitives: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, rank: int, vectors: Sequence[Sequence[int]]) -> "Config":
        vecs = tuple(tuple(int(x) for x in v) for v in vectors)
        parts = [primitive_part(v) for v in vecs]
        return cls(rank, vecs, tuple(a for a, _ in parts), tuple(p for _, p in parts))

    @property
    def n(self) -> int:
        return len(self.vectors)

    def matrix(self) -> IntMatrix:
        """``rank x n`` matrix whose columns are the ``b_i``."""
        return IntMatrix.from_columns(self.vectors, self.rank)


def validate_config(rank: int, vectors: Sequence[Sequence[int]]) -> Config:
    """Check that the vectors are nonzero and generate ``Z^rank``."""
    if rank < 1 or not vectors:
        raise EmptyConfig("configuration needs rank >= 1 and at least one vector")
    for i, v in enumerate(vectors):
        if len(v) != rank:
            raise ValueError(f"vector {i + 1} has length {len(v)}, expected {rank}")
        if not any(v):
            raise ZeroVector(f"vector {i + 1} is zero")
    c = Config.build(rank, vectors)
    divisors = smith_divisors(c.matrix())
    if len(divisors) != rank or any(x != 1 for x in divisors):
        raise NotGenerating(f"vectors do not generate Z^{rank} (Smith divisors {list(divisors)})")
    return c


@dataclass(frozen=True)
class IndepSet:
    """Linearly independent index set; the empty set stands for ``{0}``."""

    indices: tuple[int, ...]
    span_basis: IntMatrix

    @property
    def dim(self) -> int:
        return len(self.indices)

    def label(self) -> str:
        if not self.indices:
            return "0"
        return "".join(f"b{i + 1}" for i in self.indices)


@lru_cache(maxsize=4096)
def _indep(c: Config, indices: tuple[int, ...]) -> IndepSet:
    vecs = [c.vectors[i] for i in indices]
    return IndepSet(indices, saturate_span(vecs, c.rank))


def make_indep_set(c: Config, indices: Sequence[int]) -> IndepSet:
    idx = tuple(sorted(indices))
    if rank_of_vectors([c.vectors[i] for i in idx], c.rank) != len(idx):
        raise ValueError(f"indices {idx} are dependent")
    return _indep(c, idx)


@lru_cache(maxsize=1024)
def independent_sets(c: Config, max_n: int = DEFAULT_MAX_SUBSETS) -> tuple[IndepSet, ...]:
    """All independent index subsets, ordered by size then lexicographically."""
    if c.n > max_n:
        raise SizeGuard(f"n = {c.n} exceeds subset enumeration bound {max_n}")
    out = []
    for k in range(0, min(c.n, c.rank) + 1):
        for idx in combinations(range(c.n), k):
            if rank_of_vectors([c.vectors[i] for i in idx], c.rank) == k:
                out.append(_indep(c, idx))
    return tuple(out)


@dataclass(frozen=True)
class QuotientConfig:
    """Images of the ``b_i`` outside ``span F`` in ``N / (N ∩ span F)``."""

    config: Config
    index_map: tuple[int, ...]
    projection: IntMatrix


@lru_cache(maxsize=4096)
def quotient_config(c: Config, f: IndepSet) -> QuotientConfig:
    if not f.indices:
        return QuotientConfig(c, tuple(range(c.n)), IntMatrix.identity(c.rank))
    phi = lattice_complement(f.span_basis)
    keep, images = [], []
    for i, b in enumerate(c.vectors):
        img = tuple(sum(p * x for p, x in zip(row, b)) for row in phi.entries)
        if any(img):
            keep.append(i)
            images.append(img)
    q = Config.build(c.rank - f.dim, images)
    return QuotientConfig(q, tuple(keep), phi)


def f_vector(sets: Sequence[IndepSet], codim: int) -> tuple[int, ...]:
    f = [0] * (codim + 1)
    for s in sets:
        f[s.dim] += 1
    return tuple(f)


def h_polynomial(f: Sequence[int], codim: int) -> IntPolynomial:
    """``sum_i f_i t^i (1 - t)^(codim - i)``."""
    if len(f) > codim + 1:
        raise ValueError("f-vector longer than codim + 1")
    h = IntPolynomial()
    for i, fi in enumerate(f):
        h = h + IntPolynomial.monomial(i, fi) * IntPolynomial.one_minus_t_power(codim - i)
    return h


def matroid_h_polynomial(c: Config) -> IntPolynomial:
    return h_polynomial(f_vector(independent_sets(c), c.rank), c.rank)


def is_coloop_free(c: Config) -> bool:
    for i in range(c.n):
        rest = [v for j, v in enumerate(c.vectors) if j != i]
        if rank_of_vectors(rest, c.rank) != c.rank:
            return False
    return True


def bases_count(sets: Sequence[IndepSet], dim_matroid: int) -> int:
    """Number of maximal elements; 1 for the rank-0 matroid ``{0}``."""
    return sum(1 for s in sets if s.dim == dim_matroid)
