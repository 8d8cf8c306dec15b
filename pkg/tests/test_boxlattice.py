from fractions import Fraction
from itertools import product

from hypothesis import given, settings

from lawrence.boxlattice import box_count, box_points, closed_box_bounds, inverted, lift, span_index
from lawrence.intlinalg import IntMatrix, solve_rational
from lawrence.matroid import independent_sets, make_indep_set, validate_config

from conftest import configs


def box_oracle(c, f):
    """Open-box lattice points by exact solving over the bounding box."""
    if not f.indices:
        return {(0,) * c.rank}
    vecs = [c.vectors[i] for i in f.indices]
    a = IntMatrix.from_columns(vecs, c.rank)
    out = set()
    for w in product(*(range(lo, hi + 1) for lo, hi in closed_box_bounds(vecs))):
        x = solve_rational(a, w)
        if x is not None and all(0 < t < 1 for t in x):
            out.add(tuple(w))
    return out


def test_example_boxes(worked):
    assert [p.w for p in box_points(worked, make_indep_set(worked, [1, 3]))] == [(1, 0)]
    assert [p.w for p in box_points(worked, make_indep_set(worked, [2]))] == [(-1, 0)]
    assert box_points(worked, make_indep_set(worked, [2]))[0].alphas == (Fraction(1, 2),)
    assert box_count(worked, make_indep_set(worked, [0])) == 0
    assert box_count(worked, make_indep_set(worked, [])) == 1


def test_one_dimensional_two():
    c = validate_config(1, [[2], [1]])
    pts = box_points(c, make_indep_set(c, [0]))
    assert [p.w for p in pts] == [(1,)]


def test_lift(worked):
    f = make_indep_set(worked, [1, 3])
    p = box_points(worked, f)[0]
    assert lift(worked, f, p) == (1, 0, 0, 1, 0, 1)


@settings(max_examples=60, deadline=None)
@given(configs(dmax=3, nmax=4, bound=3))
def test_box_points_match_solver_oracle(c):
    for f in independent_sets(c):
        pts = box_points(c, f)
        assert {p.w for p in pts} == box_oracle(c, f)
        for p in pts:
            assert all(0 < a < 1 for a in p.alphas)
            recon = [sum(a * c.vectors[i][k] for a, i in zip(p.alphas, f.indices)) for k in range(c.rank)]
            assert recon == list(p.w)


@settings(max_examples=60, deadline=None)
@given(configs(dmax=3, nmax=4, bound=3))
def test_singleton_law_symmetry_and_index(c):
    sets = independent_sets(c)
    for i in range(c.n):
        assert box_count(c, make_indep_set(c, [i])) == c.multipliers[i] - 1
    counts = {f.indices: box_count(c, f) for f in sets}
    for f in sets:
        ws = {p.w for p in box_points(c, f)}
        assert {inverted(c, f, p) for p in box_points(c, f)} == ws
        # the half-open box tiles N ∩ span F by translates of <F>
        assert sum(v for k, v in counts.items() if set(k) <= set(f.indices)) == span_index(c, f)
