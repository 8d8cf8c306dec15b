from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lawrence.fourier_motzkin import GE, LE, LinearSystem, SystemBuilder, feasible, find_point, satisfies


def zonotope_query(total):
    # s1, s2 in [0, 1] with s1 + s2 = total
    sb = SystemBuilder(2).eq([1, 1], total)
    for row in ([1, 0], [0, 1]):
        sb.ge(row, 0).le(row, 1)
    return sb.build()


def test_interval():
    sys_ = SystemBuilder(1).ge([1], 0).le([1], 1).build()
    x = find_point(sys_)
    assert x is not None and 0 <= x[0] <= 1


def test_strict_contradiction():
    assert not feasible(SystemBuilder(1).gt([1], 0).lt([1], 0).build())


def test_weak_touching_is_feasible_but_strict_is_not():
    assert find_point(SystemBuilder(1).ge([1], 2).le([1], 2).build()) == (2,)
    assert not feasible(SystemBuilder(1).gt([1], 2).le([1], 2).build())


def test_zonotope_membership():
    assert not feasible(zonotope_query(3))
    assert find_point(zonotope_query(2)) == (1, 1)


def test_equalities_only():
    sys_ = SystemBuilder(3).eq([1, 1, 0], 1).eq([0, 1, 1], 2).build()
    x = find_point(sys_)
    assert x is not None and satisfies(sys_, x)
    assert not feasible(SystemBuilder(2).eq([1, 1], 1).eq([2, 2], 3).build())


def test_no_variables():
    assert feasible(LinearSystem(0))
    assert not feasible(LinearSystem(0, equalities=(((), Fraction(1)),)))


def test_rejects_bad_rows():
    with pytest.raises(ValueError):
        LinearSystem(2, inequalities=(((1,), 0, False, LE),))
    with pytest.raises(ValueError):
        LinearSystem(1, inequalities=(((1,), 0, False, "<"),))


constraint = st.tuples(
    st.lists(st.integers(-3, 3), min_size=2, max_size=2),
    st.integers(-4, 4),
    st.booleans(),
    st.sampled_from([LE, GE]),
)


def build(rows):
    return LinearSystem(2, inequalities=tuple((tuple(r), Fraction(b), s, d) for r, b, s, d in rows))


@given(st.lists(constraint, max_size=6))
def test_witness_satisfies_every_constraint(rows):
    s = build(rows)
    x = find_point(s)
    if x is not None:
        assert satisfies(s, x)


@given(st.lists(constraint, max_size=6))
def test_grid_points_imply_feasible(rows):
    # any satisfying point found on a rational grid forces a positive answer
    s = build(rows)
    grid = [Fraction(k, 4) for k in range(-24, 25)]
    hit = any(satisfies(s, (a, b)) for a in grid for b in grid)
    if hit:
        assert feasible(s)


@given(st.lists(constraint, max_size=6), st.randoms(use_true_random=False),
       st.lists(st.integers(1, 5), min_size=6, max_size=6))
def test_permutation_and_scaling_invariance(rows, rnd, scales):
    base = feasible(build(rows))
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert feasible(build(shuffled)) == base
    scaled = [([k * x for x in r], k * b, s, d) for (r, b, s, d), k in zip(rows, scales)]
    assert feasible(build(scaled)) == base


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-6, 6), st.booleans(),
                          st.sampled_from([LE, GE])), max_size=6))
def test_one_variable_matches_interval_arithmetic(rows):
    lo, lo_strict, hi, hi_strict = None, False, None, False
    ok = True
    for a, b, strict, d in rows:
        if a == 0:
            val = 0
            holds = (val < b if strict else val <= b) if d == LE else (val > b if strict else val >= b)
            ok &= holds
            continue
        bound = Fraction(b, a)
        upper = (d == LE) == (a > 0)
        if upper:
            if hi is None or bound < hi or (bound == hi and strict):
                hi, hi_strict = bound, strict
        else:
            if lo is None or bound > lo or (bound == lo and strict):
                lo, lo_strict = bound, strict
    if ok and lo is not None and hi is not None:
        ok = lo < hi or (lo == hi and not lo_strict and not hi_strict)
    s = LinearSystem(1, inequalities=tuple(((a,), Fraction(b), st_, d) for a, b, st_, d in rows))
    assert feasible(s) == ok
