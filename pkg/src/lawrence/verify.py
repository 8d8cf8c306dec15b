"""The invariant suite run by ``lawrence verify`` and the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from . import arrangement as arrmod
from .arrangement import Arrangement, choose_offsets, enumerate_cells, restrict
from .boxlattice import box_count, box_points, inverted, span_index
from .checks import SKIPPED, Check, CheckList, assertion, compare
from .ehrhart import (
    closed_form_checks,
    degree_bound_check,
    delta1_count_identity,
    delta_from_counts,
    delta_from_formula,
    delta_from_formula_bd,
    dilate_counts,
    flip_invariance_check,
    formula_terms,
    inequality_check,
    lattice_points_check,
    normalized_volume,
    polytope_checks,
    reciprocity_check,
)
from .errors import NotGenerating, ZeroVector
from .matroid import (
    Config,
    bases_count,
    independent_sets,
    is_coloop_free,
    quotient_config,
    validate_config,
)


@dataclass(frozen=True)
class Guards:
    max_subsets: int = 16
    max_signvectors: int = 12
    max_dilate_fibers: int = 200_000


def random_config(rng: random.Random, dmax: int = 3, nmax: int = 5, entry_bound: int = 3,
                  max_tries: int = 10_000) -> Config:
    """Rejection-sample a configuration that generates ``Z^d``."""
    for _ in range(max_tries):
        d = rng.randint(1, dmax)
        n = rng.randint(d, max(d, nmax))
        vecs = [[rng.randint(-entry_bound, entry_bound) for _ in range(d)] for _ in range(n)]
        try:
            return validate_config(d, vecs)
        except (ZeroVector, NotGenerating):
            continue
    raise RuntimeError("could not sample a generating configuration")


def sweep_configs(cases: int, seed: int = 0, dmax: int = 3, nmax: int = 5,
                  entry_bound: int = 3) -> list[Config]:
    rng = random.Random(seed)
    return [random_config(rng, dmax, nmax, entry_bound) for _ in range(cases)]


def second_arrangement(c: Config, arr: Arrangement, seed: int) -> Arrangement:
    """A simple arrangement with offsets different from ``arr``'s."""
    for s in range(seed + 1, seed + 1000):
        other = choose_offsets(c, s)
        if other.offsets != arr.offsets:
            return other
    raise RuntimeError("no second offset choice found")


@dataclass
class CaseResult:
    config: Config
    arrangement: Arrangement
    checks: CheckList = field(default_factory=CheckList)
    data: dict = field(default_factory=dict)

    @property
    def overall(self) -> str:
        return self.checks.overall


def zaslavsky_checks(c: Config, arr: Arrangement, guards: Guards, tag: str = "") -> tuple[list, dict]:
    """``h_F = h^bd_F`` and vertex counts for every F; returns census data too."""
    checks, census = [], {}
    for f, _, h in formula_terms(c, guards.max_subsets):
        res = restrict(arr, f)
        cells = enumerate_cells(res, guards.max_signvectors)
        codim = c.rank - f.dim
        hbd = arrmod.h_bd_polynomial(cells, codim)
        fbd = arrmod.bounded_f_vector(cells, codim)
        verts = sum(1 for cell in cells if cell.dim == 0)
        q = quotient_config(c, f)
        vf = bases_count(independent_sets(q.config, guards.max_subsets), codim)
        dims_ok = all(cell.dim == codim - len(cell.zeros) for cell in cells)
        inflat = sum(1 for cell in enumerate_cells(arr, guards.max_signvectors)
                     if set(f.indices) <= set(cell.zeros))
        census[f.indices] = {
            "h": list(h.coeffs), "h_bd": list(hbd.coeffs), "f_bd": list(fbd),
            "R_bd": fbd[codim], "vertices": verts,
        }
        lbl = f.label()
        checks.append(compare(f"{tag}h_F = h^bd_F [{lbl}]", list(h.coeffs), list(hbd.coeffs)))
        checks.append(compare(f"{tag}vertices of H^F = V_F [{lbl}]", vf, verts))
        checks.append(assertion(f"{tag}cell dims = codim - #zeros [{lbl}]", dims_ok))
        checks.append(compare(f"{tag}restricted cells = cells of H inside the flat [{lbl}]", inflat, len(cells)))
    return checks, census


def box_checks(c: Config, guards: Guards) -> list[Check]:
    checks = []
    sets = independent_sets(c, guards.max_subsets)
    counts = {f.indices: box_count(c, f) for f in sets}
    singles = [counts[(i,)] for i in range(c.n)]
    checks.append(compare("box({b_i}) = a_i - 1", [a - 1 for a in c.multipliers], singles))
    sym = all(
        inverted(c, f, p) in {q.w for q in box_points(c, f)}
        for f in sets for p in box_points(c, f)
    )
    checks.append(assertion("box points closed under w -> sum(F) - w", sym))
    bad = []
    for f in sets:
        sub_total = sum(v for k, v in counts.items() if set(k) <= set(f.indices))
        if sub_total != span_index(c, f):
            bad.append(f.label())
    checks.append(compare("sum_{G ⊆ F} box(G) = [N ∩ span F : <F>]", [], bad))
    return checks


def region_identity_checks(c: Config, arr: Arrangement, rng: random.Random, pairs: int,
                           guards: Guards) -> list[Check]:
    sets = independent_sets(c, guards.max_subsets)
    empty = sets[0]
    trials = [(empty, tuple(range(c.n)))]
    for _ in range(pairs):
        g = rng.choice(sets)
        outside = list(quotient_config(c, g).index_map)
        i_set = tuple(i for i in outside if rng.random() < 0.5)
        trials.append((g, i_set))
    checks = []
    for g, i_set in trials:
        r = arrmod.zaslavsky_region_identity(arr, g, i_set, guards.max_signvectors)
        name = f"regions = matroid interval count [G={g.label()}, I={[i + 1 for i in i_set]}]"
        if not r.simple:
            checks.append(Check(name, SKIPPED, detail="projected arrangement not simple"))
        else:
            checks.append(compare(name, r.matroid_count, r.regions))
    return checks


def run_suite(c: Config, seed: int = 0, offsets=None, guards: Guards = Guards(),
              region_pairs: int = 5, bruteforce_interior: Optional[int] = None,
              m_max: Optional[int] = None) -> CaseResult:
    """Every identity, inequality and invariance on one configuration."""
    arr = choose_offsets(c, seed, offsets)
    result = CaseResult(c, arr)
    ck = result.checks
    rng = random.Random(seed)
    d, n = c.rank, c.n
    D = d + n

    ck.extend(polytope_checks(c))

    formula = delta_from_formula(c, guards.max_subsets)
    bounded = delta_from_formula_bd(c, arr, guards.max_subsets, guards.max_signvectors)
    counts = dilate_counts(c, D, max_fibers=guards.max_dilate_fibers)
    brute = delta_from_counts(counts, D)
    result.data.update(formula=formula, bounded=bounded, bruteforce=brute, counts=counts)
    ck.add(compare("delta: formula = bounded", list(formula.coeffs), list(bounded.coeffs)))
    ck.add(compare("delta: formula = bruteforce", list(formula.coeffs), list(brute.coeffs)))
    ck.add(assertion("delta coefficients nonnegative", all(x >= 0 for x in formula.coeffs)))

    ck.extend(closed_form_checks(c, formula, arr, guards.max_subsets))
    ck.add(delta1_count_identity(c, formula, counts[1]))
    ck.add(assertion("deg delta <= d", degree_bound_check(formula, d)))
    vol, vcheck = normalized_volume(c, formula, guards.max_subsets)
    result.data["volume"] = vol
    ck.add(vcheck)

    zchecks, census = zaslavsky_checks(c, arr, guards)
    ck.extend(zchecks)
    arr2 = second_arrangement(c, arr, seed)
    zchecks2, census2 = zaslavsky_checks(c, arr2, guards, tag="[seed 2] ")
    ck.extend(zchecks2)
    ck.add(compare("offset invariance of bounded census", census, census2))
    ck.add(compare("offset invariance of delta (bounded route)",
                   list(bounded.coeffs), list(delta_from_formula_bd(c, arr2).coeffs)))
    result.data.update(census=census, offsets2=arr2.offsets)
    has_bounded = arrmod.bounded_regions_count(arr, guards.max_signvectors) > 0
    ck.add(compare("bounded region exists iff coloop-free", is_coloop_free(c), has_bounded))

    ck.extend(box_checks(c, guards))

    mm = m_max if m_max is not None else D + 2
    bf = bruteforce_interior if bruteforce_interior is not None else D
    ck.extend(reciprocity_check(c, formula, arr, mm, bruteforce_max=bf,
                                max_fibers=guards.max_dilate_fibers))
    ck.extend(lattice_points_check(c, guards.max_dilate_fibers))
    ck.add(inequality_check(c, formula))

    flips = [rng.choice((-1, 1)) for _ in range(n)]
    ck.add(flip_invariance_check(c, flips, formula))

    ck.extend(region_identity_checks(c, arr, rng, region_pairs, guards))
    return result
