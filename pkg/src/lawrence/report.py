"""JSON-ready report sections and a plain-text renderer for them."""

from __future__ import annotations

import os
import sys
from fractions import Fraction
from typing import Any, Optional

from .arrangement import Arrangement, bounded_regions_count, enumerate_cells, restrict
from .boxlattice import box_points
from .ehrhart import (
    delta_bruteforce,
    delta_from_formula,
    delta_from_formula_bd,
    interior_census,
    volume_cross_sum,
)
from .lattice_count import count_lattice_points, enumerate_points
from .matroid import (
    Config,
    IndepSet,
    f_vector,
    h_polynomial,
    independent_sets,
    is_coloop_free,
    quotient_config,
)
from .polynomial import IntPolynomial

SCHEMA_VERSION = 1


def rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_doc(p: IntPolynomial) -> dict:
    return {"coefficients": list(p.coeffs), "display": str(p)}


def labels(f: IndepSet) -> list[int]:
    return [i + 1 for i in f.indices]


def input_section(c: Config, seed: int) -> dict:
    return {
        "rank": c.rank,
        "vectors": [list(v) for v in c.vectors],
        "multipliers": list(c.multipliers),
        "seed": seed,
    }


def matroid_section(c: Config, max_subsets: int) -> dict:
    sets = independent_sets(c, max_subsets)
    elements = []
    for f in sets:
        q = quotient_config(c, f)
        codim = c.rank - f.dim
        fv = f_vector(independent_sets(q.config, max_subsets), codim)
        elements.append({
            "element": f.label(),
            "indices": labels(f),
            "dim": f.dim,
            "f_vector": list(fv),
            "h": str(h_polynomial(fv, codim)),
        })
    fv = f_vector(sets, c.rank)
    return {
        "size": len(sets),
        "f_vector": list(fv),
        "h": poly_doc(h_polynomial(fv, c.rank)),
        "coloop_free": is_coloop_free(c),
        "elements": elements,
    }


def boxes_section(c: Config, max_subsets: int) -> dict:
    rows = []
    for f in independent_sets(c, max_subsets):
        pts = box_points(c, f)
        rows.append({
            "element": f.label(),
            "count": len(pts),
            "points": [list(p.w) for p in pts],
        })
    return {"total": sum(r["count"] for r in rows), "elements": rows}


def census(arr: Arrangement, max_signvectors: int) -> dict:
    cells = enumerate_cells(arr, max_signvectors)
    by_dim = []
    for k in range(arr.dim + 1):
        ks = [cell for cell in cells if cell.dim == k]
        by_dim.append({
            "dim": k,
            "bounded": sum(1 for cell in ks if cell.bounded),
            "unbounded": sum(1 for cell in ks if not cell.bounded),
        })
    return {
        "hyperplanes": [i + 1 for i in arr.labels],
        "offsets": [rat(r) for r in arr.offsets],
        "cells": by_dim,
        "bounded_regions": bounded_regions_count(arr, max_signvectors),
        "vertices": sum(1 for cell in cells if cell.dim == 0),
    }


def arrangement_section(c: Config, arr: Arrangement, source: str, max_signvectors: int,
                        flat: Optional[IndepSet] = None) -> dict:
    out = {"offsets_source": source, **census(arr, max_signvectors)}
    if flat is not None:
        out["flat"] = {"element": flat.label(), **census(restrict(arr, flat), max_signvectors)}
    return out


def delta_section(c: Config, arr: Arrangement, methods, guards) -> dict:
    out = {}
    if "formula" in methods:
        out["formula"] = poly_doc(delta_from_formula(c, guards.max_subsets))
    if "bounded" in methods:
        out["bounded"] = poly_doc(delta_from_formula_bd(c, arr, guards.max_subsets, guards.max_signvectors))
    if "bruteforce" in methods:
        out["bruteforce"] = poly_doc(delta_bruteforce(c, max_fibers=guards.max_dilate_fibers))
    if len(out) > 1:
        out["agree"] = len({tuple(v["coefficients"]) for v in out.values()}) == 1
    return out


def points_section(c: Config, arr: Arrangement, m: int, interior: bool, cap: int, guards) -> dict:
    if not interior:
        count = count_lattice_points(c, m, max_fibers=guards.max_dilate_fibers)
        out = {"dilate": m, "interior": False, "count": count}
        if count <= cap:
            out["points"] = [list(p) for p in enumerate_points(c, m, max_fibers=guards.max_dilate_fibers)]
        return out
    pts = interior_census(c, arr, m).points[m] if m >= 1 else []
    direct = count_lattice_points(c, m, interior=True, max_fibers=guards.max_dilate_fibers)
    out = {"dilate": m, "interior": True, "count": len(pts), "direct_count": direct}
    if len(pts) <= cap:
        out["points"] = [list(map(int, p)) for p in pts]
    return out


def volume_section(c: Config, guards) -> dict:
    delta = delta_from_formula(c, guards.max_subsets)
    vol = int(delta.evaluate(1))
    cross = volume_cross_sum(c, guards.max_subsets)
    return {"delta_at_1": vol, "box_times_vertices": cross, "agree": vol == cross}


# ------------------------------------------------------------------ rendering


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


_COLORS = {"pass": "\x1b[32m", "fail": "\x1b[31m", "skipped": "\x1b[33m"}


def _scalar(v: Any, color: bool) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, str) and color and v in _COLORS:
        return f"{_COLORS[v]}{v}\x1b[0m"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(str(x) for x in v) + "]"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x, False) for x in v) + "]"
    return str(v)


def _is_table(v) -> bool:
    return (isinstance(v, list) and v and all(isinstance(x, dict) for x in v)
            and all(not isinstance(y, dict) for x in v for y in x.values()))


def render_text(doc: Any, stream=None) -> str:
    """Indented key/value text; lists of flat records become aligned tables."""
    color = _use_color(stream or sys.stdout)
    lines: list[str] = []

    def walk(obj, indent):
        pad = "  " * indent
        for key, val in obj.items():
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                walk(val, indent + 1)
            elif _is_table(val):
                lines.append(f"{pad}{key}:")
                cols = list(dict.fromkeys(k for row in val for k in row))
                cells = [[_scalar(row.get(k, ""), False) for k in cols] for row in val]
                widths = [max(len(k), *(len(r[j]) for r in cells)) for j, k in enumerate(cols)]
                lines.append(pad + "  " + "  ".join(k.ljust(w) for k, w in zip(cols, widths)).rstrip())
                for r, row in zip(cells, val):
                    text = "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
                    if color and row.get("status") in _COLORS:
                        text = text.replace(row["status"], _scalar(row["status"], True), 1)
                    lines.append(pad + "  " + text)
            elif isinstance(val, list) and any(isinstance(x, dict) for x in val):
                lines.append(f"{pad}{key}:")
                for i, item in enumerate(val):
                    lines.append(f"{pad}  - [{i}]")
                    walk(item, indent + 2)
            else:
                lines.append(f"{pad}{key}: {_scalar(val, color)}")

    walk(doc, 0)
    return "\n".join(lines) + "\n"
