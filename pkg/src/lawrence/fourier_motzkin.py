"""Exact feasibility of mixed strict/weak linear systems.

Fourier-Motzkin elimination over :class:`~fractions.Fraction`.  Equalities are
substituted away first, then variables are eliminated one at a time with
parallel-row pruning after every step.  A witness is reconstructed by back
substitution and re-checked against the original constraints before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

LE, GE = "<=", ">="


@dataclass(frozen=True)
class LinearSystem:
    """Equalities ``row . x = rhs`` and inequalities ``row . x (<,<=,>,>=) rhs``.

    ``inequalities`` entries are ``(row, rhs, strict, direction)`` with
    ``direction`` one of ``"<="`` / ``">="``; ``strict`` turns them into
    ``<`` / ``>``.
    """

    nvars: int
    equalities: tuple = ()
    inequalities: tuple = ()

    def __post_init__(self):
        for row, *_ in self.equalities + self.inequalities:
            if len(row) != self.nvars:
                raise ValueError("constraint row has wrong length")
        for _, _, strict, direction in self.inequalities:
            if direction not in (LE, GE):
                raise ValueError(f"bad direction {direction!r}")


class SystemBuilder:
    """Mutable helper for assembling a :class:`LinearSystem`."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self._eq: list = []
        self._ineq: list = []

    def eq(self, row, rhs):
        self._eq.append((tuple(row), Fraction(rhs)))
        return self

    def le(self, row, rhs, strict=False):
        self._ineq.append((tuple(row), Fraction(rhs), strict, LE))
        return self

    def ge(self, row, rhs, strict=False):
        self._ineq.append((tuple(row), Fraction(rhs), strict, GE))
        return self

    def lt(self, row, rhs):
        return self.le(row, rhs, strict=True)

    def gt(self, row, rhs):
        return self.ge(row, rhs, strict=True)

    def build(self) -> LinearSystem:
        return LinearSystem(self.nvars, tuple(self._eq), tuple(self._ineq))


# internal constraint: (coeffs tuple[Fraction], rhs Fraction, strict bool) meaning
# coeffs . x < rhs (strict) or <= rhs


def _normalize(coeffs, rhs, strict):
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return tuple(coeffs), rhs, strict
    s = abs(lead)
    return tuple(c / s for c in coeffs), rhs / s, strict


def _prune(rows):
    """Drop parallel duplicates, keeping the tightest bound per direction.

    Returns ``None`` if a constant row is violated.
    """
    best: dict = {}
    for coeffs, rhs, strict in rows:
        coeffs, rhs, strict = _normalize(coeffs, rhs, strict)
        if not any(coeffs):
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        cur = best.get(coeffs)
        if cur is None or rhs < cur[0] or (rhs == cur[0] and strict and not cur[1]):
            best[coeffs] = (rhs, strict)
    return [(c, r, s) for c, (r, s) in best.items()]


@dataclass
class _Stage:
    var: int
    rows: list = field(default_factory=list)


def find_point(system: LinearSystem) -> Optional[tuple[Fraction, ...]]:
    """Return a rational point satisfying ``system`` or ``None``."""
    n = system.nvars
    rows = []
    for row, rhs, strict, direction in system.inequalities:
        c = tuple(Fraction(x) for x in row)
        r = Fraction(rhs)
        if direction == GE:
            c, r = tuple(-x for x in c), -r
        rows.append((c, r, strict))

    # substitute equalities: x_j = (rhs - sum_{k != j} a_k x_k) / a_j
    eqs = [(tuple(Fraction(x) for x in row), Fraction(rhs)) for row, rhs in system.equalities]
    subs = []
    while eqs:
        coeffs, rhs = eqs.pop()
        j = next((k for k, c in enumerate(coeffs) if c != 0), None)
        if j is None:
            if rhs != 0:
                return None
            continue
        aj = coeffs[j]
        expr = tuple(Fraction(0) if k == j else -c / aj for k, c in enumerate(coeffs))
        const = rhs / aj
        subs.append((j, expr, const))

        def sub(c, r):
            cj = c[j]
            if cj == 0:
                return c, r
            newc = tuple(Fraction(0) if k == j else ck + cj * expr[k] for k, ck in enumerate(c))
            return newc, r - cj * const

        eqs = [sub(c, r) for c, r in eqs]
        rows = [(*sub(c, r), s) for c, r, s in rows]

    rows = _prune(rows)
    if rows is None:
        return None

    stages = []
    remaining = {k for c, _, _ in rows for k, x in enumerate(c) if x != 0}
    while remaining:
        def cost(k):
            pos = sum(1 for c, _, _ in rows if c[k] > 0)
            neg = sum(1 for c, _, _ in rows if c[k] < 0)
            return pos * neg - pos - neg, k

        k = min(remaining, key=cost)
        stage = _Stage(k, [r for r in rows if r[0][k] != 0])
        stages.append(stage)
        pos = [r for r in stage.rows if r[0][k] > 0]
        neg = [r for r in stage.rows if r[0][k] < 0]
        new = [r for r in rows if r[0][k] == 0]
        for cp, rp, sp in pos:
            for cn, rn, sn in neg:
                lp, ln = cp[k], -cn[k]
                coeffs = tuple(ln * a + lp * b for a, b in zip(cp, cn))
                new.append((coeffs, ln * rp + lp * rn, sp or sn))
        rows = _prune(new)
        if rows is None:
            return None
        remaining = {j for c, _, _ in rows for j, x in enumerate(c) if x != 0}

    x = [Fraction(0)] * n
    for stage in reversed(stages):
        k = stage.var
        lo = hi = None  # (value, strict)
        for c, r, s in stage.rows:
            rest = r - sum(c[j] * x[j] for j in range(n) if j != k)
            bound = rest / c[k]
            if c[k] > 0:
                if hi is None or bound < hi[0] or (bound == hi[0] and s):
                    hi = (bound, s)
            else:
                if lo is None or bound > lo[0] or (bound == lo[0] and s):
                    lo = (bound, s)
        if lo is None and hi is None:
            val = Fraction(0)
        elif lo is None:
            val = hi[0] - 1 if hi[1] else hi[0]
        elif hi is None:
            val = lo[0] + 1 if lo[1] else lo[0]
        else:
            val = (lo[0] + hi[0]) / 2
        x[k] = val
    for j, expr, const in reversed(subs):
        x[j] = const + sum(e * xv for e, xv in zip(expr, x))
    witness = tuple(x)
    if not satisfies(system, witness):
        raise AssertionError("Fourier-Motzkin witness failed re-check")
    return witness


def feasible(system: LinearSystem) -> bool:
    return find_point(system) is not None


def satisfies(system: LinearSystem, point: Sequence) -> bool:
    """Exact check of every constraint at ``point``."""
    for row, rhs in system.equalities:
        if sum(Fraction(a) * p for a, p in zip(row, point)) != rhs:
            return False
    for row, rhs, strict, direction in system.inequalities:
        v = sum(Fraction(a) * p for a, p in zip(row, point))
        if direction == LE:
            ok = v < rhs if strict else v <= rhs
        else:
            ok = v > rhs if strict else v >= rhs
        if not ok:
            return False
    return True
