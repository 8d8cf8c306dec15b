"""Ehrhart delta-polynomials of Lawrence polytopes, computed exactly."""

from .arrangement import Arrangement, Cell, choose_offsets, enumerate_cells, restrict
from .boxlattice import BoxPoint, box_count, box_points
from .ehrhart import (
    DeltaResult,
    LawrencePolytope,
    delta_bruteforce,
    delta_from_counts,
    delta_from_formula,
    delta_from_formula_bd,
)
from .matroid import Config, IndepSet, independent_sets, quotient_config, validate_config
from .polynomial import IntPolynomial

__all__ = [
    "Arrangement",
    "BoxPoint",
    "Cell",
    "Config",
    "DeltaResult",
    "IndepSet",
    "IntPolynomial",
    "LawrencePolytope",
    "box_count",
    "box_points",
    "choose_offsets",
    "delta_bruteforce",
    "delta_from_counts",
    "delta_from_formula",
    "delta_from_formula_bd",
    "enumerate_cells",
    "independent_sets",
    "quotient_config",
    "restrict",
    "validate_config",
]

__version__ = "0.1.0"
