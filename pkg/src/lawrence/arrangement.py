"""Simple co-oriented hyperplane arrangements and their cells.

Hyperplane ``i`` is ``{u : <u, b_i> = r_i}`` in the dual space.  Cells are
indexed by sign vectors in ``{-1, 0, +1}^n`` and decided with exact
Fourier-Motzkin feasibility queries.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import lcm
from typing import Optional, Sequence

from .errors import EmptyFlat, NotSimple, RetryExhausted, SizeGuard
from .fourier_motzkin import SystemBuilder, find_point
from .intlinalg import IntMatrix, rank, rank_of_vectors, solve_rational
from .matroid import Config, IndepSet, independent_sets, quotient_config
from .polynomial import IntPolynomial

log = logging.getLogger(__name__)

DEFAULT_MAX_SIGNVECTORS = 12


@dataclass(frozen=True)
class Arrangement:
    config: Config
    offsets: tuple[Fraction, ...]
    # original hyperplane indices, kept aligned through restrictions
    labels: tuple[int, ...] = None

    def __post_init__(self):
        if len(self.offsets) != self.config.n:
            raise ValueError("one offset per vector required")
        object.__setattr__(self, "offsets", tuple(Fraction(r) for r in self.offsets))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.config.n)))

    @property
    def dim(self) -> int:
        return self.config.rank


@dataclass(frozen=True)
class Cell:
    sign: tuple[int, ...]
    dim: int
    bounded: bool
    witness: tuple[Fraction, ...]

    @property
    def zeros(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sign) if s == 0)


def is_simple(arr: Arrangement) -> bool:
    """Every dependent subset of hyperplanes must have empty intersection."""
    c = arr.config
    for k in range(2, c.n + 1):
        for idx in combinations(range(c.n), k):
            vecs = [c.vectors[i] for i in idx]
            rk = rank_of_vectors(vecs, c.rank)
            if rk == k:
                continue
            # augmented rank over Q, offsets cleared to a common denominator
            den = lcm(*(arr.offsets[i].denominator for i in idx))
            aug = [[x * den for x in v] + [int(arr.offsets[i] * den)] for v, i in zip(vecs, idx)]
            if rank(IntMatrix.from_rows(aug)) == rk:
                return False
    return True


def choose_offsets(
    c: Config,
    seed: int = 0,
    offsets: Optional[Sequence] = None,
    start_bound: Optional[int] = None,
    budget: int = 64,
) -> Arrangement:
    """Simple arrangement for ``c``.

    Supplied ``offsets`` are used when they give a simple arrangement;
    otherwise integer offsets are drawn from ``[-K, K]`` with a seeded
    generator, doubling ``K`` after each failed round.
    """
    if offsets is not None:
        arr = Arrangement(c, tuple(Fraction(r) for r in offsets))
        if is_simple(arr):
            return arr
        log.warning("supplied offsets do not give a simple arrangement; regenerating")
    rng = random.Random(seed)
    bound = start_bound if start_bound is not None else 2 * c.n
    for _ in range(budget):
        arr = Arrangement(c, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(c.n)))
        if is_simple(arr):
            return arr
        bound *= 2
    raise RetryExhausted(f"no simple offsets found in {budget} rounds")


def _cell_system(arr: Arrangement, sign):
    c = arr.config
    sb = SystemBuilder(c.rank)
    for b, r, s in zip(c.vectors, arr.offsets, sign):
        if s == 0:
            sb.eq(b, r)
        elif s > 0:
            sb.gt(b, r)
        else:
            sb.lt(b, r)
    return sb.build()


def _is_bounded(arr: Arrangement, sign) -> bool:
    """A nonempty cell is bounded iff its recession cone is ``{0}``."""
    c = arr.config
    d = c.rank
    for k in range(d):
        for direction in (1, -1):
            sb = SystemBuilder(d)
            for b, s in zip(c.vectors, sign):
                if s == 0:
                    sb.eq(b, 0)
                elif s > 0:
                    sb.ge(b, 0)
                else:
                    sb.le(b, 0)
            unit = tuple(direction if j == k else 0 for j in range(d))
            sb.ge(unit, 1)
            if find_point(sb.build()) is not None:
                return False
    return True


@lru_cache(maxsize=2048)
def enumerate_cells(arr: Arrangement, max_n: int = DEFAULT_MAX_SIGNVECTORS) -> tuple[Cell, ...]:
    """All nonempty cells, sorted by sign vector."""
    c = arr.config
    if c.n > max_n:
        raise SizeGuard(f"n = {c.n} exceeds sign-vector bound {max_n}")
    cells = []
    for sign in product((-1, 0, 1), repeat=c.n):
        nzero = sum(1 for s in sign if s == 0)
        if nzero > c.rank:
            continue
        pt = find_point(_cell_system(arr, sign))
        if pt is None:
            continue
        cells.append(Cell(sign, c.rank - nzero, _is_bounded(arr, sign), pt))
    return tuple(sorted(cells, key=lambda cell: cell.sign))


def bounded_f_vector(cells: Sequence[Cell], dim: int) -> tuple[int, ...]:
    f = [0] * (dim + 1)
    for cell in cells:
        if cell.bounded:
            f[cell.dim] += 1
    return tuple(f)


def h_bd_polynomial(cells: Sequence[Cell], codim: int) -> IntPolynomial:
    """``sum_i f^bd_i (t - 1)^i`` over bounded cells."""
    return h_bd_from_f(bounded_f_vector(cells, codim))


def h_bd_from_f(fbd: Sequence[int]) -> IntPolynomial:
    h = IntPolynomial()
    for i, fi in enumerate(fbd):
        h = h + IntPolynomial.t_minus_one_power(i) * fi
    return h


@lru_cache(maxsize=4096)
def restrict(arr: Arrangement, f: IndepSet) -> Arrangement:
    """Arrangement induced on the flat ``∩_{i in F} H_i``.

    Coordinates on the flat are dual to the quotient lattice used by
    :func:`~lawrence.matroid.quotient_config`, so hyperplanes are indexed
    exactly like the quotient configuration.
    """
    if not f.indices:
        return arr
    c = arr.config
    q = quotient_config(c, f)
    a = IntMatrix.from_rows([c.vectors[i] for i in f.indices], c.rank)
    u0 = solve_rational(a, [arr.offsets[i] for i in f.indices])
    if u0 is None:
        raise EmptyFlat(f"flat of {f.label()} is empty")
    offsets = tuple(
        arr.offsets[i] - sum(x * y for x, y in zip(u0, c.vectors[i])) for i in q.index_map
    )
    out = Arrangement(q.config, offsets, tuple(arr.labels[i] for i in q.index_map))
    if not is_simple(out):
        raise NotSimple(f"restriction to {f.label()} is not simple")
    return out


def bounded_regions_count(arr: Arrangement, max_n: int = DEFAULT_MAX_SIGNVECTORS) -> int:
    d = arr.dim
    return sum(1 for cell in enumerate_cells(arr, max_n) if cell.bounded and cell.dim == d)


def vertex_count(arr: Arrangement, max_n: int = DEFAULT_MAX_SIGNVECTORS) -> int:
    return sum(1 for cell in enumerate_cells(arr, max_n) if cell.dim == 0)


def sub_arrangement(arr: Arrangement, positions: Sequence[int]) -> Arrangement:
    """Keep only the hyperplanes at the given positions."""
    pos = list(positions)
    cfg = Config.build(arr.config.rank, [arr.config.vectors[i] for i in pos])
    return Arrangement(cfg, tuple(arr.offsets[i] for i in pos), tuple(arr.labels[i] for i in pos))


def count_regions(arr: Arrangement, max_n: int = DEFAULT_MAX_SIGNVECTORS) -> int:
    """Number of full-dimensional cells."""
    c = arr.config
    if c.n > max_n:
        raise SizeGuard(f"n = {c.n} exceeds sign-vector bound {max_n}")
    return sum(
        1 for sign in product((-1, 1), repeat=c.n)
        if find_point(_cell_system(arr, sign)) is not None
    )


@dataclass(frozen=True)
class RegionIdentity:
    regions: Optional[int]
    matroid_count: int
    simple: bool

    @property
    def holds(self) -> bool:
        return self.simple and self.regions == self.matroid_count


def zaslavsky_region_identity(
    arr: Arrangement,
    g: IndepSet,
    i_set: Sequence[int],
    max_n: int = DEFAULT_MAX_SIGNVECTORS,
) -> RegionIdentity:
    """Regions of ``{phi_G(H_i) : i in I}`` against the matroid interval count.

    ``matroid_count`` is the number of independent ``G'`` with
    ``G ⊆ G' ⊆ G ∪ I``.  If the projected arrangement is not simple,
    ``regions`` is ``None`` and ``simple`` is false.
    """
    c = arr.config
    i_set = tuple(sorted(set(i_set)))
    allowed = set(g.indices) | set(i_set)
    mcount = sum(
        1 for s in independent_sets(c)
        if set(g.indices) <= set(s.indices) <= allowed
    )
    res = restrict(arr, g)
    pos = []
    for i in i_set:
        if i not in res.labels:
            raise ValueError(f"b{i + 1} lies in span of {g.label()}")
        pos.append(res.labels.index(i))
    sub = sub_arrangement(res, pos)
    if not is_simple(sub):
        return RegionIdentity(None, mcount, False)
    return RegionIdentity(count_regions(sub, max_n), mcount, True)
