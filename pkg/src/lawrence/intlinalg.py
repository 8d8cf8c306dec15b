"""Exact integer and rational linear algebra.

Matrices are small (a handful of rows and columns), so everything is done
with Python integers and :class:`fractions.Fraction`; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with an explicit shape.

    The shape is stored separately from the entries so that ``0 x k`` and
    ``k x 0`` matrices are representable.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in cols]
        data = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(nrows, len(cols), data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.columns()))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        data = tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries
        )
        return IntMatrix(self.rows, other.cols, data)

    def select_rows(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(idx), self.cols, tuple(self.entries[i] for i in idx))

    def select_columns(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _as_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def hermite_normal_form(m) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  Pivots of
    ``h`` are positive and entries above a pivot lie in ``[0, pivot)``.
    Zero rows are collected at the bottom, so the rank is the number of
    nonzero rows.
    """
    m = _as_matrix(m)
    a = [list(r) for r in m.entries]
    u = [list(r) for r in IntMatrix.identity(m.rows).entries]
    nrows, ncols = m.rows, m.cols
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        while True:
            nz = [i for i in range(pr, nrows) if a[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(a[i][col]), i))
            a[pr], a[p] = a[p], a[pr]
            u[pr], u[p] = u[p], u[pr]
            clean = True
            piv = a[pr][col]
            for i in range(pr + 1, nrows):
                if a[i][col]:
                    q = a[i][col] // piv
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[pr])]
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if a[pr][col] == 0:
            continue
        if a[pr][col] < 0:
            a[pr] = [-x for x in a[pr]]
            u[pr] = [-x for x in u[pr]]
        piv = a[pr][col]
        for i in range(pr):
            q = a[i][col] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pr])]
        pr += 1
    return IntMatrix(nrows, ncols, tuple(map(tuple, a))), IntMatrix(nrows, nrows, tuple(map(tuple, u)))


def smith_normal_form(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(s, u, v)`` with ``u @ m @ v == s``.

    ``s`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.
    """
    m = _as_matrix(m)
    nr, nc = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [list(r) for r in IntMatrix.identity(nr).entries]
    v = [list(r) for r in IntMatrix.identity(nc).entries]

    def swap_cols(mat, i, j):
        for r in mat:
            r[i], r[j] = r[j], r[i]

    def addmul_col(mat, dst, src, q):
        # column dst -= q * column src
        for r in mat:
            r[dst] -= q * r[src]

    for t in range(min(nr, nc)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        u[t], u[pi] = u[pi], u[t]
        swap_cols(a, t, pj)
        swap_cols(v, t, pj)
        while True:
            moved = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        u[t], u[i] = u[i], u[t]
                        moved = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    addmul_col(a, j, t, q)
                    addmul_col(v, j, t, q)
                    if a[t][j]:
                        swap_cols(a, t, j)
                        swap_cols(v, t, j)
                        moved = True
            if moved:
                continue
            # pivot now isolated; enforce divisibility of the trailing block
            piv = a[t][t]
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return (
        IntMatrix(nr, nc, tuple(map(tuple, a))),
        IntMatrix(nr, nr, tuple(map(tuple, u))),
        IntMatrix(nc, nc, tuple(map(tuple, v))),
    )


def smith_divisors(m) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form."""
    s, _, _ = smith_normal_form(m)
    return tuple(s[i, i] for i in range(min(s.shape)) if s[i, i] != 0)


def rank(m) -> int:
    h, _ = hermite_normal_form(m)
    return sum(1 for r in h.entries if any(r))


def rank_of_vectors(vectors: Sequence[Sequence[int]], dim: int) -> int:
    if not vectors:
        return 0
    return rank(IntMatrix.from_rows(vectors, dim))


def integer_kernel(m) -> IntMatrix:
    """Rows form a Z-basis of ``{x in Z^cols : m @ x = 0}``."""
    m = _as_matrix(m)
    h, u = hermite_normal_form(m.transpose())
    basis = [u.row(i) for i in range(h.rows) if not any(h.row(i))]
    return IntMatrix.from_rows(basis, m.cols)


def saturate_span(vectors: Sequence[Sequence[int]], dim: int) -> IntMatrix:
    """Basis (as rows, in Hermite form) of ``Z^dim ∩ span(vectors)``."""
    if not vectors:
        return IntMatrix.zeros(0, dim)
    orth = integer_kernel(IntMatrix.from_rows(vectors, dim))
    sat = integer_kernel(orth)
    h, _ = hermite_normal_form(sat)
    return IntMatrix.from_rows([r for r in h.entries if any(r)], dim)


def lattice_complement(basis: IntMatrix) -> IntMatrix:
    """Projection onto the quotient by a saturated sublattice.

    ``basis`` holds the sublattice generators as rows.  The returned
    ``(dim - r) x dim`` matrix ``phi`` is surjective onto ``Z^(dim-r)`` and
    its kernel is exactly the sublattice.  ``phi`` is read off the
    transformation matrix of a Hermite form of ``basis^T``.
    """
    dim = basis.cols
    r = basis.rows
    h, u = hermite_normal_form(basis.transpose())
    top = h.select_rows(range(r))
    if r and abs(determinant(top)) != 1:
        raise ValueError("sublattice is not saturated")
    return u.select_rows(range(r, dim))


def determinant(m) -> int:
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    # fraction-free Bareiss elimination
    a = [list(r) for r in m.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_rational(a, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One exact solution of ``a @ x = b`` or ``None`` when inconsistent.

    Free variables are set to zero, so the answer is unique whenever the
    columns of ``a`` are independent.
    """
    a = _as_matrix(a)
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    nr, nc = a.shape
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a.entries, b)]
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nr):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    if any(aug[i][nc] != 0 for i in range(r, nr)):
        return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = aug[i][nc]
    return tuple(x)


def primitive_part(v: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Split a nonzero integer vector as ``a * p`` with ``a > 0``, ``p`` primitive."""
    g = gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return g, tuple(x // g for x in v)
