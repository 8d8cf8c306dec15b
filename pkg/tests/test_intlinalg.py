from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lawrence.intlinalg import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    integer_kernel,
    lattice_complement,
    primitive_part,
    rank,
    saturate_span,
    smith_divisors,
    smith_normal_form,
    solve_rational,
)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def is_row_hnf(h: IntMatrix) -> bool:
    last = -1
    seen_zero = False
    for i in range(h.rows):
        row = h.row(i)
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        if any(not 0 <= h[k, p] < row[p] for k in range(i)):
            return False
        last = p
    return True


def test_hnf_identity():
    h, u = hermite_normal_form(IntMatrix.identity(2))
    assert h == IntMatrix.identity(2)
    assert u == IntMatrix.identity(2)


def test_hnf_two_by_two():
    m = IntMatrix.from_rows([[2, 4], [1, 3]])
    h, u = hermite_normal_form(m)
    assert u @ m == h
    assert abs(determinant(h)) == 2
    assert abs(determinant(u)) == 1
    assert is_row_hnf(h)


def test_hnf_zero():
    h, u = hermite_normal_form(IntMatrix.zeros(2, 3))
    assert h == IntMatrix.zeros(2, 3)
    assert u == IntMatrix.identity(2)


@given(matrices)
def test_hnf_reconstructs(rows):
    m = IntMatrix.from_rows(rows)
    h, u = hermite_normal_form(m)
    assert u @ m == h
    assert abs(determinant(u)) == 1
    assert is_row_hnf(h)


def test_snf_identity():
    assert smith_divisors(IntMatrix.identity(3)) == (1, 1, 1)


def test_snf_example_configuration_generates():
    m = IntMatrix.from_columns([(1, 0), (0, 1), (-2, 0), (2, -1)], 2)
    assert smith_divisors(m) == (1, 1)


def test_snf_single_column_two():
    assert smith_divisors(IntMatrix.from_rows([[2]])) == (2,)


@given(matrices)
def test_snf_reconstructs(rows):
    m = IntMatrix.from_rows(rows)
    s, u, v = smith_normal_form(m)
    assert u @ m @ v == s
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    diag = [s[i, i] for i in range(min(s.shape))]
    assert all(s[i, j] == 0 for i in range(s.rows) for j in range(s.cols) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


def test_rank_examples():
    assert rank(IntMatrix.zeros(3, 2)) == 0
    assert rank(IntMatrix.from_columns([(1, 0), (-2, 0)], 2)) == 1
    assert rank(IntMatrix.from_columns([(1, 0), (0, 1), (-2, 0), (2, -1)], 2)) == 2


def test_saturate_examples():
    assert saturate_span([(2, 0)], 2).tolist() == [[1, 0]]
    assert saturate_span([], 2).rows == 0
    full = saturate_span([(1, 0), (0, 1)], 2)
    assert abs(determinant(full)) == 1


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=3))
def test_saturate_contains_inputs_and_is_saturated(vecs):
    basis = saturate_span(vecs, 3)
    assert basis.rows == rank(IntMatrix.from_rows(vecs))
    if basis.rows == 0:
        return
    for v in vecs:
        x = solve_rational(basis.transpose(), v)
        assert x is not None and all(c.denominator == 1 for c in x)
    # the basis extends to a unimodular matrix iff the quotient is torsion-free
    assert all(d == 1 for d in smith_divisors(basis))


def test_lattice_complement_kills_span():
    basis = saturate_span([(2, 0, 2), (0, 1, 1)], 3)
    phi = lattice_complement(basis)
    assert phi.rows == 1
    assert phi @ basis.transpose() == IntMatrix.zeros(1, 2)


def test_lattice_complement_rejects_unsaturated():
    with pytest.raises(ValueError):
        lattice_complement(IntMatrix.from_rows([[2, 0]]))


def test_integer_kernel():
    k = integer_kernel(IntMatrix.from_rows([[1, 2, 3]]))
    assert k.rows == 2
    assert IntMatrix.from_rows([[1, 2, 3]]) @ k.transpose() == IntMatrix.zeros(1, 2)


def test_solve_examples():
    assert solve_rational(IntMatrix.identity(2), [3, Fraction(1, 2)]) == (3, Fraction(1, 2))
    a = IntMatrix.from_columns([(0, 1), (2, -1)], 2)
    assert solve_rational(a, [-2, 0]) == (-1, -1)
    assert solve_rational(IntMatrix.from_rows([[0]]), [1]) is None


@given(matrices, st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_solve_consistent_systems(rows, x):
    a = IntMatrix.from_rows(rows)
    x = x[:a.cols]
    b = [sum(a[i, j] * x[j] for j in range(a.cols)) for i in range(a.rows)]
    sol = solve_rational(a, b)
    assert sol is not None
    assert [sum(a[i, j] * sol[j] for j in range(a.cols)) for i in range(a.rows)] == b


def test_determinant_bareiss():
    assert determinant(IntMatrix.from_rows([[2, 4], [1, 3]])) == 2
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])) == -3


def test_primitive_part():
    assert primitive_part((-2, 0)) == (2, (-1, 0))
    assert primitive_part((3, 6, -9)) == (3, (1, 2, -3))


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, ((1, 2),))
