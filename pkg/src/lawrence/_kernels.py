"""Integer counting kernels: numba ``@njit`` with a pure-numpy fallback.

Set ``LAWRENCE_DISABLE_NUMBA=1`` to force the numpy path.  Both paths take
the same int64 arrays and must return identical results; callers are
responsible for checking that no intermediate value can overflow int64
(see :func:`lawrence.lattice_count.int64_safe`).
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("LAWRENCE_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError("disabled by LAWRENCE_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- numpy path


def count_cone_points_numpy(vectors, normals, caps, comps, strict):
    """Count ``(x, mu)`` with ``mu`` a row of ``comps`` and ``x`` in the cone fiber.

    ``vectors`` is ``n x d`` (rows ``b_i``), ``normals`` is ``K x d`` and
    ``caps`` is ``K x n``; a point lies in the cone iff
    ``normals @ x <= caps @ mu`` row by row (``<`` and ``mu > 0`` when
    ``strict``).
    """
    total = 0
    d = vectors.shape[1]
    neg = np.minimum(vectors, 0)
    pos = np.maximum(vectors, 0)
    for mu in comps:
        if strict and (mu <= 0).any():
            continue
        bound = caps @ mu
        lo = mu @ neg
        hi = mu @ pos
        if strict:
            lo = lo + 1
            hi = hi - 1
            if (lo > hi).any():
                continue
        axes = [np.arange(lo[k], hi[k] + 1, dtype=np.int64) for k in range(d)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
        vals = grid @ normals.T
        ok = (vals < bound) if strict else (vals <= bound)
        total += int(ok.all(axis=1).sum())
    return total


def points_in_cone_numpy(points, d, normals, caps, strict):
    """Boolean mask of rows ``(x, mu)`` lying in the cone (interior if ``strict``)."""
    x = points[:, :d]
    mu = points[:, d:]
    lhs = x @ normals.T
    rhs = mu @ caps.T
    if strict:
        return (lhs < rhs).all(axis=1) & (mu > 0).all(axis=1)
    return (lhs <= rhs).all(axis=1) & (mu >= 0).all(axis=1)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _count_cone_points_jit(vectors, normals, caps, comps, strict):
        n, d = vectors.shape
        K = normals.shape[0]
        total = 0
        lo = np.empty(d, dtype=np.int64)
        hi = np.empty(d, dtype=np.int64)
        x = np.empty(d, dtype=np.int64)
        bound = np.empty(K, dtype=np.int64)
        for p in range(comps.shape[0]):
            skip = False
            if strict:
                for i in range(n):
                    if comps[p, i] <= 0:
                        skip = True
                        break
            if skip:
                continue
            for k in range(K):
                s = 0
                for i in range(n):
                    s += caps[k, i] * comps[p, i]
                bound[k] = s
            empty = False
            for j in range(d):
                a = 0
                b = 0
                for i in range(n):
                    v = vectors[i, j] * comps[p, i]
                    if v < 0:
                        a += v
                    else:
                        b += v
                if strict:
                    a += 1
                    b -= 1
                if a > b:
                    empty = True
                lo[j] = a
                hi[j] = b
                x[j] = a
            if empty:
                continue
            while True:
                inside = True
                for k in range(K):
                    s = 0
                    for j in range(d):
                        s += normals[k, j] * x[j]
                    if strict:
                        if s >= bound[k]:
                            inside = False
                            break
                    elif s > bound[k]:
                        inside = False
                        break
                if inside:
                    total += 1
                # odometer step
                j = 0
                while j < d:
                    if x[j] < hi[j]:
                        x[j] += 1
                        break
                    x[j] = lo[j]
                    j += 1
                if j == d:
                    break
        return total

    @njit(cache=True)
    def _points_in_cone_jit(points, d, normals, caps, strict):
        m = points.shape[0]
        n = points.shape[1] - d
        K = normals.shape[0]
        out = np.zeros(m, dtype=np.bool_)
        for p in range(m):
            ok = True
            for i in range(n):
                mu = points[p, d + i]
                if (strict and mu <= 0) or mu < 0:
                    ok = False
                    break
            if ok:
                for k in range(K):
                    lhs = 0
                    for j in range(d):
                        lhs += normals[k, j] * points[p, j]
                    rhs = 0
                    for i in range(n):
                        rhs += caps[k, i] * points[p, d + i]
                    if (strict and lhs >= rhs) or lhs > rhs:
                        ok = False
                        break
            out[p] = ok
        return out

    def count_cone_points_numba(vectors, normals, caps, comps, strict):
        return int(_count_cone_points_jit(vectors, normals, caps, comps, bool(strict)))

    def points_in_cone_numba(points, d, normals, caps, strict):
        return _points_in_cone_jit(points, int(d), normals, caps, bool(strict))

    count_cone_points = count_cone_points_numba
    points_in_cone = points_in_cone_numba
else:
    count_cone_points_numba = None
    points_in_cone_numba = None
    count_cone_points = count_cone_points_numpy
    points_in_cone = points_in_cone_numpy
