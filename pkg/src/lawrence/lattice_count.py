"""Brute-force lattice-point counting in dilates of the Lawrence polytope.

Points of the m-th dilate are pairs ``(x, mu)`` with ``mu >= 0``,
``sum(mu) = m`` and ``x`` in the zonotope ``sum_i [0, mu_i] b_i``.

Two independent membership tests are provided:

* ``method="fm"`` asks Fourier-Motzkin whether some ``s`` with
  ``0 <= s_i <= mu_i`` has ``sum s_i b_i = x``.  Exact but slow.
* ``method="kernel"`` uses integer inequalities ``<c, x> <= sum_i mu_i
  max(0, <c, b_i>)``, one per ray ``c`` of the central arrangement
  ``{c : <c, b_i> = 0}``.  The right side is the support function of the
  zonotope, which is linear on each chamber of that arrangement; since the
  ``b_i`` span, every chamber is pointed and checking its rays suffices.
  These run in the int64 kernels of :mod:`lawrence._kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from . import _kernels
from .errors import SizeGuard
from .fourier_motzkin import SystemBuilder, find_point
from .intlinalg import IntMatrix, integer_kernel, rank_of_vectors
from .matroid import Config

DEFAULT_MAX_DILATE_FIBERS = 200_000
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class GradedCount:
    m: int
    count: int
    interior: int


@lru_cache(maxsize=1024)
def cone_inequalities(c: Config) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """``(normals, caps)`` describing the cone over the Lawrence polytope.

    ``(x, mu)`` is in the cone iff ``mu >= 0`` and for every row ``k``:
    ``normals[k] . x <= caps[k] . mu``.
    """
    d = c.rank
    rays = set()
    for idx in combinations(range(c.n), d - 1):
        vecs = [c.vectors[i] for i in idx]
        if d > 1 and rank_of_vectors(vecs, d) != d - 1:
            continue
        ker = integer_kernel(IntMatrix.from_rows(vecs, d)) if vecs else IntMatrix.identity(d)
        if ker.rows != 1:
            continue
        r = ker.row(0)
        rays.add(r)
        rays.add(tuple(-x for x in r))
    normals = tuple(sorted(rays))
    caps = tuple(
        tuple(max(0, sum(a * b for a, b in zip(nrm, v))) for v in c.vectors) for nrm in normals
    )
    return normals, caps


def compositions(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        return np.zeros((1 if total == 0 else 0, 0), dtype=np.int64)
    rows = []
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        row = []
        for b in bars:
            row.append(b - prev - 1)
            prev = b
        row.append(total + parts - 1 - prev - 1)
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(-1, parts)


def int64_safe(c: Config, m: int) -> bool:
    normals, caps = cone_inequalities(c)
    xmax = m * max(max(abs(x) for x in v) for v in c.vectors)
    nmax = max((sum(abs(x) for x in r) for r in normals), default=0)
    cmax = max((max(r) for r in caps), default=0)
    return max(nmax * xmax * c.rank, cmax * m, xmax * c.rank) < _INT64_SAFE


def _arrays(c: Config):
    normals, caps = cone_inequalities(c)
    return (
        np.array(c.vectors, dtype=np.int64).reshape(c.n, c.rank),
        np.array(normals, dtype=np.int64).reshape(-1, c.rank),
        np.array(caps, dtype=np.int64).reshape(-1, c.n),
    )


def _in_zonotope_fm(c: Config, mu, x) -> bool:
    sb = SystemBuilder(c.n)
    for k in range(c.rank):
        sb.eq([v[k] for v in c.vectors], x[k])
    for i in range(c.n):
        unit = [int(j == i) for j in range(c.n)]
        sb.ge(unit, 0)
        sb.le(unit, mu[i])
    return find_point(sb.build()) is not None


def _fiber_box(c: Config, mu):
    return [
        range(sum(min(0, m_i * v[k]) for m_i, v in zip(mu, c.vectors)),
              sum(max(0, m_i * v[k]) for m_i, v in zip(mu, c.vectors)) + 1)
        for k in range(c.rank)
    ]


def enumerate_points_fm(c: Config, m: int, max_fibers: int = DEFAULT_MAX_DILATE_FIBERS):
    """Lattice points of the m-th dilate via the zonotope-fiber FM test."""
    _guard(c, m, max_fibers)
    out = []
    for mu in compositions(m, c.n).tolist():
        for x in product(*_fiber_box(c, mu)):
            if _in_zonotope_fm(c, mu, x):
                out.append(tuple(x) + tuple(mu))
    return out


def _guard(c: Config, m: int, max_fibers: int):
    nfib = comb(m + c.n - 1, c.n - 1)
    if nfib > max_fibers:
        raise SizeGuard(f"{nfib} dilate fibers at m = {m} exceed bound {max_fibers}")


def count_lattice_points(
    c: Config,
    m: int,
    interior: bool = False,
    method: str = "kernel",
    max_fibers: int = DEFAULT_MAX_DILATE_FIBERS,
) -> int:
    """Number of lattice points of ``m P_B`` (of its relative interior if asked)."""
    if m < 0:
        raise ValueError("dilate must be nonnegative")
    if m == 0:
        return 0 if interior else 1
    _guard(c, m, max_fibers)
    if method == "fm":
        if interior:
            raise ValueError("the fm route counts closed dilates only")
        return len(enumerate_points_fm(c, m, max_fibers))
    if method != "kernel":
        raise ValueError(f"unknown method {method!r}")
    comps = compositions(m, c.n)
    vectors, normals, caps = _arrays(c)
    if not int64_safe(c, m):
        return _count_exact(c, m, comps, interior)
    return _kernels.count_cone_points(vectors, normals, caps, comps, interior)


def _count_exact(c: Config, m, comps, strict):
    # Python-int path for inputs whose values could overflow int64
    normals, caps = cone_inequalities(c)
    total = 0
    for mu in comps.tolist():
        if strict and min(mu) <= 0:
            continue
        bound = [sum(a * b for a, b in zip(cap, mu)) for cap in caps]
        for x in product(*_fiber_box(c, mu)):
            vals = (sum(a * b for a, b in zip(nrm, x)) for nrm in normals)
            if all((v < b) if strict else (v <= b) for v, b in zip(vals, bound)):
                total += 1
    return total


def graded_counts(c: Config, m_max: int, max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> list[GradedCount]:
    return [
        GradedCount(m, count_lattice_points(c, m, max_fibers=max_fibers),
                    count_lattice_points(c, m, interior=True, max_fibers=max_fibers))
        for m in range(m_max + 1)
    ]


def in_cone(c: Config, points: np.ndarray, strict: bool = False) -> np.ndarray:
    """Membership mask for rows ``(x, mu)`` of ``points``."""
    _, normals, caps = _arrays(c)
    pts = np.asarray(points, dtype=np.int64).reshape(-1, c.rank + c.n)
    return _kernels.points_in_cone(pts, c.rank, normals, caps, strict)


def enumerate_points(c: Config, m: int, interior: bool = False,
                     max_fibers: int = DEFAULT_MAX_DILATE_FIBERS) -> list[tuple[int, ...]]:
    """Sorted lattice points of ``m P_B`` (or its interior) via the cone inequalities."""
    if m == 0:
        return [] if interior else [(0,) * (c.rank + c.n)]
    _guard(c, m, max_fibers)
    out = []
    for mu in compositions(m, c.n).tolist():
        axes = [np.arange(r.start, r.stop, dtype=np.int64) for r in _fiber_box(c, mu)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, c.rank)
        pts = np.hstack([grid, np.tile(np.array(mu, dtype=np.int64), (len(grid), 1))])
        out.extend(map(tuple, pts[in_cone(c, pts, strict=interior)].tolist()))
    return sorted(out)
