"""Lattice points of open parallelepipeds and their lifts into the cone."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .intlinalg import IntMatrix, determinant, solve_rational
from .matroid import Config, IndepSet


@dataclass(frozen=True)
class BoxPoint:
    """``w = sum_j alpha_j b_{k_j}`` with every ``alpha_j`` in ``(0, 1)``."""

    w: tuple[int, ...]
    alphas: tuple[Fraction, ...]


def _adjugate(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * determinant(IntMatrix.from_rows(minor))
    return adj


def closed_box_bounds(vectors) -> list[tuple[int, int]]:
    """Per-coordinate integer bounds of the closed parallelepiped."""
    dim = len(vectors[0])
    return [
        (sum(min(0, v[k]) for v in vectors), sum(max(0, v[k]) for v in vectors))
        for k in range(dim)
    ]


@lru_cache(maxsize=4096)
def box_points(c: Config, f: IndepSet) -> tuple[BoxPoint, ...]:
    """Lattice points strictly inside the parallelepiped spanned by ``f``.

    Candidates come from the integer bounding box.  The coefficients are
    found from an invertible ``r x r`` minor by Cramer's rule in integer
    arithmetic and the full reconstruction is checked exactly.
    """
    if not f.indices:
        return (BoxPoint((0,) * c.rank, ()),)
    vecs = [c.vectors[i] for i in f.indices]
    r = len(vecs)
    # rows of the d x r matrix with a nonzero r x r minor
    for rows in combinations(range(c.rank), r):
        sub = [[v[k] for v in vecs] for k in rows]
        det = determinant(IntMatrix.from_rows(sub))
        if det:
            break
    else:
        raise ValueError("index set is dependent")
    adj = _adjugate(sub)
    sgn = 1 if det > 0 else -1
    mag = abs(det)
    out = []
    ranges = [range(lo + 1, hi) if lo < hi else range(lo, hi + 1)
              for lo, hi in closed_box_bounds(vecs)]
    for w in product(*ranges):
        rhs = [w[k] for k in rows]
        nums = [sgn * sum(a * x for a, x in zip(arow, rhs)) for arow in adj]
        if not all(0 < x < mag for x in nums):
            continue
        if any(sum(nums[j] * vecs[j][k] for j in range(r)) != mag * w[k] for k in range(c.rank)):
            continue
        out.append(BoxPoint(tuple(w), tuple(Fraction(x, mag) for x in nums)))
    return tuple(out)


def box_count(c: Config, f: IndepSet) -> int:
    return len(box_points(c, f))


def lift(c: Config, f: IndepSet, p: BoxPoint) -> tuple[int, ...]:
    """``l(w) = sum_{i in F} (alpha_i b_i, e_i)`` as a point of ``Z^(d+n)``."""
    e = [0] * c.n
    for i in f.indices:
        e[i] = 1
    return tuple(p.w) + tuple(e)


def span_index(c: Config, f: IndepSet) -> int:
    """Index of the subgroup generated by ``f`` in ``N ∩ span F``."""
    if not f.indices:
        return 1
    basis = f.span_basis
    coords = []
    for i in f.indices:
        x = solve_rational(basis.transpose(), c.vectors[i])
        if x is None or any(v.denominator != 1 for v in x):
            raise ArithmeticError("span basis does not contain the generators")
        coords.append([int(v) for v in x])
    return abs(determinant(IntMatrix.from_rows(coords)))


def inverted(c: Config, f: IndepSet, p: BoxPoint) -> tuple[int, ...]:
    """Image of ``w`` under ``w -> sum_{i in F} b_i - w``."""
    total = [sum(c.vectors[i][k] for i in f.indices) for k in range(c.rank)]
    return tuple(t - x for t, x in zip(total, p.w))
