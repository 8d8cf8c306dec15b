"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line that is printed in the pytest
terminal summary (and immediately when run with ``-s``).
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from lawrence import arrangement, boxlattice, lattice_count, matroid
from lawrence.arrangement import Arrangement
from lawrence.boxlattice import box_points
from lawrence.checks import PASS, SKIPPED
from lawrence.ehrhart import delta_bruteforce, delta_from_formula, delta_from_formula_bd, inequality_check
from lawrence.matroid import (
    f_vector,
    h_polynomial,
    independent_sets,
    is_coloop_free,
    make_indep_set,
    quotient_config,
    validate_config,
)
from lawrence.polynomial import IntPolynomial
from lawrence.verify import run_suite, sweep_configs

from conftest import ACCEPTANCE_LINES, WORKED_OFFSETS, WORKED_VECTORS

SWEEP_CASES = 50
SWEEP_SEED = 2024
WORKED_DELTA = IntPolynomial([1, 3, 4])


@contextmanager
def criterion(number, title):
    ok = False
    try:
        yield
        ok = True
    finally:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        ACCEPTANCE_LINES[number] = line
        print(line)


def clear_caches():
    for mod in (matroid, boxlattice, arrangement, lattice_count):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def checks_named(result, prefix):
    return [c for c in result.checks.checks if c.name.startswith(prefix)]


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    configs = sweep_configs(SWEEP_CASES, SWEEP_SEED, dmax=3, nmax=5, entry_bound=3)
    results = [run_suite(c, seed=i) for i, c in enumerate(configs)]
    return results, time.perf_counter() - start


def test_sweep_shape(sweep):
    results, _ = sweep
    assert len(results) >= 50
    for r in results:
        c = r.config
        assert 1 <= c.rank <= 3 and c.n <= 5
        assert all(-3 <= x <= 3 for v in c.vectors for x in v)
        assert validate_config(c.rank, c.vectors) == c


def test_c01_worked_example_end_to_end():
    with criterion(1, "worked example end to end, three methods, < 5 s"):
        clear_caches()
        start = time.perf_counter()
        c = validate_config(2, WORKED_VECTORS)
        arr = Arrangement(c, tuple(Fraction(r) for r in WORKED_OFFSETS))
        assert arrangement.is_simple(arr)
        sets = independent_sets(c)
        assert len(sets) == 10

        def h_of(idx):
            f = make_indep_set(c, idx)
            codim = c.rank - f.dim
            return h_polynomial(f_vector(independent_sets(quotient_config(c, f).config), codim), codim)

        assert h_of([]) == IntPolynomial([1, 2, 2])
        assert h_of([2]) == IntPolynomial([1, 1])
        assert h_of([1, 3]) == IntPolynomial([1])
        assert [p.w for p in box_points(c, make_indep_set(c, [1, 3]))] == [(1, 0)]
        assert [p.w for p in box_points(c, make_indep_set(c, [2]))] == [(-1, 0)]
        assert delta_from_formula(c) == WORKED_DELTA
        assert delta_from_formula_bd(c, arr) == WORKED_DELTA
        assert delta_bruteforce(c) == WORKED_DELTA
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, elapsed


def test_c01_worked_example_fm_counting_route():
    # the zonotope-fiber feasibility route, independent of the cone inequalities
    c = validate_config(2, WORKED_VECTORS)
    assert delta_bruteforce(c, method="fm") == WORKED_DELTA


def test_c02_oracle_equivalence(sweep):
    results, elapsed = sweep
    with criterion(2, f"formula = bounded = counts on {len(results)} sweep cases, < 10 min"):
        for r in results:
            assert r.data["formula"] == r.data["bounded"] == r.data["bruteforce"], r.config
        assert elapsed < 600, elapsed


def test_c03_closed_forms(sweep):
    results, _ = sweep
    with criterion(3, "closed forms for delta_0, delta_1, tail, delta_d, delta(1)"):
        names = ["delta_0 = 1", "delta_1 = sum(a_i) - d", "delta_k = 0 for k > d",
                 "delta_d = sum_F box(F) R^bd_F", "delta(1) = sum_F box(F) V_F"]
        for r in results:
            c, delta = r.config, r.data["formula"]
            assert delta[0] == 1
            assert delta[1] == sum(c.multipliers) - c.rank
            assert all(delta[k] == 0 for k in range(c.rank + 1, c.rank + c.n))
            for name in names:
                found = checks_named(r, name)
                assert len(found) == 1 and found[0].status == PASS, (name, r.config)


def test_c04_zaslavsky_equality(sweep):
    results, _ = sweep
    with criterion(4, "h_F = h^bd_F for every F under two offset seeds"):
        for r in results:
            nflats = len(independent_sets(r.config))
            first = checks_named(r, "h_F = h^bd_F")
            second = checks_named(r, "[seed 2] h_F = h^bd_F")
            assert len(first) == len(second) == nflats
            assert all(c.status == PASS for c in first + second)
            assert r.data["offsets2"] != r.arrangement.offsets


def test_c05_reciprocity(sweep):
    results, _ = sweep
    with criterion(5, "interior counts match the reciprocal series up to m = n + d + 2"):
        for r in results:
            for name in ("reciprocity series = interior counts", "no interior points below m = n",
                         "interior count at m = n equals delta_d", "direct interior counts"):
                found = checks_named(r, name)
                assert len(found) == 1 and found[0].status == PASS, (name, r.config)
            series = checks_named(r, "reciprocity series")[0]
            assert len(series.actual) == r.config.rank + r.config.n + 2


def test_c06_lattice_points(sweep):
    results, _ = sweep
    with criterion(6, "lattice points of P_B equal the m = 1 enumeration"):
        for r in results:
            for name in ("lattice points of P = brute force", "#(P ∩ lattice) = sum(a_i + 1)"):
                found = checks_named(r, name)
                assert len(found) == 1 and found[0].status == PASS, (name, r.config)


def test_c07_inequality(sweep):
    results, _ = sweep
    with criterion(7, "delta_i <= delta_j on coloop-free cases; d=1, B={1} not applicable"):
        coloop_free = 0
        for r in results:
            (check,) = checks_named(r, "delta_i <= delta_j")
            if is_coloop_free(r.config):
                coloop_free += 1
                assert check.status == PASS, r.config
            else:
                assert check.status == SKIPPED
        assert coloop_free > 0
        c = validate_config(1, [[1]])
        delta = delta_from_formula(c)
        check = inequality_check(c, delta)
        assert check.status == SKIPPED and "not applicable" in check.detail
        assert delta[0] > delta[1]


def test_c08_orientation_flip(sweep):
    results, _ = sweep
    with criterion(8, "delta invariant under a random sign flip"):
        for r in results:
            (check,) = checks_named(r, "delta invariant under flips")
            assert check.status == PASS, r.config


def test_c09_region_identity(sweep):
    results, _ = sweep
    with criterion(9, "regions = matroid interval count (G = 0 with full I, plus 5 random pairs)"):
        for r in results:
            found = checks_named(r, "regions = matroid interval count")
            assert len(found) == 6
            assert found[0].name.startswith("regions = matroid interval count [G=0, I=[")
            assert found[0].status == PASS
            for c in found:
                assert c.status == PASS or (c.status == SKIPPED and c.detail), r.config


def _cli_json(args):
    proc = subprocess.run([sys.executable, "-m", "lawrence", *args], capture_output=True, check=False)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_c10_determinism(tmp_path, sweep):
    results, _ = sweep
    with criterion(10, "byte-identical JSON reports on repeated runs"):
        worked = tmp_path / "worked.json"
        worked.write_text(json.dumps({"rank": 2, "vectors": WORKED_VECTORS,
                                   "offsets": [str(r) for r in WORKED_OFFSETS]}))
        case = tmp_path / "case.json"
        c = results[0].config
        case.write_text(json.dumps({"rank": c.rank, "vectors": [list(v) for v in c.vectors], "seed": 0}))
        for path, cmd in ((worked, "report"), (case, "verify")):
            a = _cli_json([cmd, str(path), "--format", "json"])
            b = _cli_json([cmd, str(path), "--format", "json"])
            assert a == b
            assert json.loads(a)["schema_version"] == 1
        gen = ["verify", "--cases", "1", "--seed", str(SWEEP_SEED), "--format", "json"]
        assert _cli_json(gen) == _cli_json(gen)
