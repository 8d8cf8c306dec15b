"""Ehrhart delta-polynomials of Lawrence polytopes.

Three routes to the same polynomial:

* ``formula``: sum over independent sets ``F`` of
  ``#(BOX(F) ∩ N) * t^dim F * h_F(t)`` with ``h_F`` the h-polynomial of the
  quotient matroid,
* ``bounded``: the same sum with ``h_F`` replaced by the bounded-cell
  h-polynomial of the restricted arrangement,
* ``bruteforce``: dilate counts ``f(0..n+d)`` convolved with ``(1-t)^(n+d)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from .arrangement import (
    Arrangement,
    bounded_regions_count,
    enumerate_cells,
    h_bd_polynomial,
    restrict,
)
from .boxlattice import box_count, box_points, lift
from .checks import FAIL, PASS, SKIPPED, Check, assertion, compare
from .errors import NegativeDelta, PolynomialityViolation, SizeGuard
from .intlinalg import rank_of_vectors
from .lattice_count import (
    DEFAULT_MAX_DILATE_FIBERS,
    compositions,
    count_lattice_points,
    enumerate_points_fm,
    in_cone,
)
from .matroid import (
    DEFAULT_MAX_SUBSETS,
    Config,
    bases_count,
    f_vector,
    h_polynomial,
    independent_sets,
    is_coloop_free,
    quotient_config,
    validate_config,
)
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class LawrencePolytope:
    config: Config

    @property
    def ambient_rank(self) -> int:
        return self.config.rank + self.config.n

    def vertices(self) -> list[tuple[int, ...]]:
        c = self.config
        out = []
        for i, b in enumerate(c.vectors):
            e = tuple(int(j == i) for j in range(c.n))
            out.append(tuple(b) + e)
            out.append((0,) * c.rank + e)
        return out

    def dimension(self) -> int:
        verts = self.vertices()
        base = verts[0]
        diffs = [tuple(a - b for a, b in zip(v, base)) for v in verts[1:]]
        return rank_of_vectors(diffs, self.ambient_rank)


@dataclass(frozen=True)
class DeltaResult:
    delta: IntPolynomial
    method: str
    seed: Optional[int] = None
    offsets: Optional[tuple] = None


# ------------------------------------------------------------------ formulas


def formula_terms(c: Config, max_subsets: int = DEFAULT_MAX_SUBSETS):
    """Per-F data ``(F, box count, h_F)``."""
    for f in independent_sets(c, max_subsets):
        codim = c.rank - f.dim
        q = quotient_config(c, f)
        h = h_polynomial(f_vector(independent_sets(q.config, max_subsets), codim), codim)
        yield f, box_count(c, f), h


def delta_from_formula(c: Config, max_subsets: int = DEFAULT_MAX_SUBSETS) -> IntPolynomial:
    total = IntPolynomial()
    for f, nbox, h in formula_terms(c, max_subsets):
        if nbox:
            total = total + h.shift(f.dim) * nbox
    return total


def delta_from_formula_bd(c: Config, arr: Arrangement, max_subsets: int = DEFAULT_MAX_SUBSETS,
                          max_signvectors: int = 12) -> IntPolynomial:
    if arr.config != c:
        raise ValueError("arrangement was built for a different configuration")
    total = IntPolynomial()
    for f in independent_sets(c, max_subsets):
        nbox = box_count(c, f)
        if not nbox:
            continue
        cells = enumerate_cells(restrict(arr, f), max_signvectors)
        total = total + h_bd_polynomial(cells, c.rank - f.dim).shift(f.dim) * nbox
    return total


def delta_from_counts(counts: Sequence[int], total_degree: int) -> IntPolynomial:
    """Numerator of ``sum f(m) t^m`` over ``(1 - t)^total_degree``.

    ``counts`` must hold ``f(0) .. f(total_degree)``; the last value only
    serves as a polynomiality witness.
    """
    D = total_degree
    if len(counts) < D + 1:
        raise ValueError(f"need counts for m = 0..{D}")
    delta = [
        sum((-1) ** j * comb(D, j) * counts[k - j] for j in range(k + 1)) for k in range(D + 1)
    ]
    if delta[D] != 0:
        raise PolynomialityViolation(f"coefficient of t^{D} is {delta[D]}, expected 0")
    if any(x < 0 for x in delta):
        raise NegativeDelta(f"negative coefficient in {delta}")
    return IntPolynomial(delta[:D])


def dilate_counts(c: Config, m_max: int, method: str = "kernel",
                  max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> list[int]:
    return [count_lattice_points(c, m, method=method, max_fibers=max_fibers) for m in range(m_max + 1)]


def delta_bruteforce(c: Config, method: str = "kernel",
                     max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> IntPolynomial:
    D = c.n + c.rank
    return delta_from_counts(dilate_counts(c, D, method, max_fibers), D)


# ------------------------------------------------------------------ closed forms


def closed_form_checks(c: Config, delta: IntPolynomial, arr: Arrangement,
                       max_subsets: int = DEFAULT_MAX_SUBSETS) -> list[Check]:
    d = c.rank
    checks = [
        compare("delta_0 = 1", 1, delta[0]),
        compare("delta_1 = sum(a_i) - d", sum(c.multipliers) - d, delta[1]),
        compare("delta_k = 0 for k > d", [], [k for k in range(d + 1, c.n + d) if delta[k]]),
    ]
    top = sum(
        box_count(c, f) * bounded_regions_count(restrict(arr, f))
        for f in independent_sets(c, max_subsets)
    )
    checks.append(compare("delta_d = sum_F box(F) R^bd_F", top, delta[d]))
    return checks


def volume_cross_sum(c: Config, max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    total = 0
    for f in independent_sets(c, max_subsets):
        q = quotient_config(c, f)
        total += box_count(c, f) * bases_count(independent_sets(q.config, max_subsets), q.config.rank)
    return total


def normalized_volume(c: Config, delta: IntPolynomial,
                      max_subsets: int = DEFAULT_MAX_SUBSETS) -> tuple[int, Check]:
    """``delta(1)`` together with its check against ``sum_F box(F) V_F``."""
    vol = int(delta.evaluate(1))
    return vol, compare("delta(1) = sum_F box(F) V_F", volume_cross_sum(c, max_subsets), vol)


def delta1_count_identity(c: Config, delta: IntPolynomial, f1: int) -> Check:
    dim_p = c.rank + c.n - 1
    return compare("delta_1 = f(1) - dim P - 1", f1 - dim_p - 1, delta[1])


# ------------------------------------------------------------------ interior points


@dataclass
class InteriorCensus:
    points: dict = field(default_factory=dict)  # m -> array of points
    duplicates: int = 0
    outside: int = 0


def _interior_pieces(c: Config, arr: Arrangement, max_signvectors: int = 12):
    """Yield ``(base point, ray matrix)`` for every (F, w, bounded cell C)."""
    d, n = c.rank, c.n
    cells = [cell for cell in enumerate_cells(arr, max_signvectors) if cell.bounded]
    indep = {s.indices: s for s in independent_sets(c)}
    for cell in cells:
        zeros = cell.zeros
        neg_side = [i for i, s in enumerate(cell.sign) if s <= 0]
        pos_side = [i for i, s in enumerate(cell.sign) if s >= 0]
        rays = []
        for i in neg_side:
            rays.append(tuple(c.vectors[i]) + tuple(int(j == i) for j in range(n)))
        for i in pos_side:
            rays.append((0,) * d + tuple(int(j == i) for j in range(n)))
        rays = np.array(rays, dtype=np.int64).reshape(-1, d + n)
        for k in range(len(zeros) + 1):
            for sub in combinations(zeros, k):
                f = indep[sub]
                fixed = np.zeros(d + n, dtype=np.int64)
                for i in neg_side:
                    if i not in sub:
                        fixed[:d] += c.vectors[i]
                        fixed[d + i] += 1
                for i in pos_side:
                    if i not in sub:
                        fixed[d + i] += 1
                for p in box_points(c, f):
                    yield fixed + np.array(lift(c, f, p), dtype=np.int64), rays


def interior_census(c: Config, arr: Arrangement, m_max: int,
                    max_signvectors: int = 12, max_points: int = 5_000_000) -> InteriorCensus:
    """Interior lattice points of ``m P_B`` for ``1 <= m <= m_max``.

    Points are generated from the parameterization by (F, w in BOX(F),
    bounded cell C, nonnegative ray multiplicities), then deduplicated and
    re-verified against the cone inequalities.
    """
    d = c.rank
    buckets = defaultdict(list)
    generated = 0
    for base, rays in _interior_pieces(c, arr, max_signvectors):
        g0 = int(base[d:].sum())
        for m in range(max(g0, 1), m_max + 1):
            comps = compositions(m - g0, rays.shape[0])
            pts = base + comps @ rays
            generated += len(pts)
            if generated > max_points:
                raise SizeGuard(f"more than {max_points} interior points generated")
            buckets[m].append(pts)
    census = InteriorCensus()
    for m in range(1, m_max + 1):
        if buckets.get(m):
            allpts = np.concatenate(buckets[m])
        else:
            allpts = np.zeros((0, d + c.n), dtype=np.int64)
        uniq = np.unique(allpts, axis=0)
        census.duplicates += len(allpts) - len(uniq)
        if len(uniq):
            census.outside += int((~in_cone(c, uniq, strict=True)).sum())
        census.points[m] = uniq
    return census


def interior_points(c: Config, arr: Arrangement, m: int) -> np.ndarray:
    return interior_census(c, arr, m).points[m]


def reciprocity_series(delta: IntPolynomial, total_degree: int, m_max: int) -> list[int]:
    """Coefficients of ``t^D delta(1/t) / (1 - t)^D`` for ``t^0 .. t^m_max``."""
    return delta.substitute_reciprocal(total_degree).series_over_one_minus_t(total_degree, m_max)


def reciprocity_check(c: Config, delta: IntPolynomial, arr: Arrangement, m_max: int,
                      bruteforce_max: Optional[int] = None,
                      max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> list[Check]:
    """Interior counts against the reciprocal series, coefficient by coefficient.

    With ``bruteforce_max`` the parameterized counts are also compared to a
    direct interior count for ``m <= bruteforce_max``.
    """
    if m_max < 1:
        return [Check("reciprocity", SKIPPED, detail="m_max < 1")]
    D = c.n + c.rank
    series = reciprocity_series(delta, D, m_max)
    census = interior_census(c, arr, m_max)
    counts = [0] + [len(census.points[m]) for m in range(1, m_max + 1)]
    checks = [
        compare("reciprocity series = interior counts", series[1:], counts[1:]),
        compare("interior parameterization has no repeats", 0, census.duplicates),
        compare("parameterized points are interior", 0, census.outside),
        compare("no interior points below m = n", [], [m for m in range(1, min(c.n, m_max + 1)) if counts[m]]),
    ]
    if c.n <= m_max:
        checks.append(compare("interior count at m = n equals delta_d", delta[c.rank], counts[c.n]))
    if bruteforce_max:
        top = min(bruteforce_max, m_max)
        direct = [count_lattice_points(c, m, interior=True, max_fibers=max_fibers) for m in range(1, top + 1)]
        checks.append(compare("direct interior counts = parameterized counts", direct, counts[1:top + 1]))
    return checks


# ------------------------------------------------------------------ other properties


def lattice_points_of_P(c: Config) -> list[tuple[int, ...]]:
    """``{(lambda v_i, e_i) : 0 <= lambda <= a_i}``, sorted."""
    out = set()
    for i, (a, v) in enumerate(zip(c.multipliers, c.primitives)):
        e = tuple(int(j == i) for j in range(c.n))
        for lam in range(a + 1):
            out.add(tuple(lam * x for x in v) + e)
    return sorted(out)


def lattice_points_check(c: Config, max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> list[Check]:
    explicit = lattice_points_of_P(c)
    oracle = sorted(enumerate_points_fm(c, 1, max_fibers))
    return [
        compare("lattice points of P = brute force (m = 1)", oracle, explicit),
        compare("#(P ∩ lattice) = sum(a_i + 1)", sum(a + 1 for a in c.multipliers), len(explicit)),
    ]


def inequality_check(c: Config, delta: IntPolynomial) -> Check:
    """``delta_i <= delta_j`` for ``i <= j <= d - i`` when coloop-free."""
    if not is_coloop_free(c):
        return Check("delta_i <= delta_j (i <= j <= d - i)", SKIPPED, detail="not applicable: matroid has a coloop")
    d = c.rank
    bad = [(i, j) for i in range(d + 1) for j in range(i, d - i + 1) if delta[i] > delta[j]]
    return Check("delta_i <= delta_j (i <= j <= d - i)", FAIL if bad else PASS,
                 expected=[], actual=[list(p) for p in bad])


def orientation_flip(c: Config, flips: Sequence[int]) -> Config:
    """Replace ``b_i`` by ``-b_i`` wherever ``flips[i]`` is negative."""
    if len(flips) != c.n:
        raise ValueError("one sign per vector required")
    vecs = [tuple(-x for x in v) if s < 0 else v for v, s in zip(c.vectors, flips)]
    return validate_config(c.rank, vecs)


def flip_invariance_check(c: Config, flips: Sequence[int], delta: IntPolynomial) -> Check:
    flipped = orientation_flip(c, flips)
    return compare(f"delta invariant under flips {list(flips)}", list(delta.coeffs),
                   list(delta_from_formula(flipped).coeffs))


def degree_bound_check(delta: IntPolynomial, d: int) -> bool:
    return delta.degree <= d


def polytope_checks(c: Config) -> list[Check]:
    p = LawrencePolytope(c)
    verts = p.vertices()
    return [
        compare("Lawrence polytope has 2n vertex candidates", 2 * c.n, len(verts)),
        compare("dim P = d + n - 1", c.rank + c.n - 1, p.dimension()),
        assertion("vertices lie in the slab sum(mu) = 1", all(sum(v[c.rank:]) == 1 for v in verts)),
    ]
