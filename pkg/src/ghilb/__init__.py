"""Exact G-Hilb computations for finite abelian G in SL(3, C).

Builds the G-Hilb triangulation of the junior simplex from torus-fixed
G-clusters and decides, by fixed-point localization, in which homological
degree the McKay image of each character skyscraper lives.
"""

__version__ = "0.1.0"

from .errors import ConsistencyError, NoMinimizer, TilingError
from .fan import Fan, Triangle, Wall, build_fan, candidate_triangles, fan_statistics
from .ggraph import GGraph, class_minimizers, ggraph_for_cone
from .ktheory import (
    b0_report,
    classify_character,
    duality_check,
    euler_characteristic,
    psi_class,
    wall_degree,
)
from .lattice import (
    Character,
    GroupSpec,
    GroupSpecError,
    JuniorPoint,
    LatticeContext,
    build_lattice_context,
    character_of,
    junior_points,
    parse_group_spec,
)
from .report import analyze

__all__ = [
    "__version__",
    "ConsistencyError",
    "NoMinimizer",
    "TilingError",
    "Fan",
    "Triangle",
    "Wall",
    "build_fan",
    "candidate_triangles",
    "fan_statistics",
    "GGraph",
    "class_minimizers",
    "ggraph_for_cone",
    "b0_report",
    "classify_character",
    "duality_check",
    "euler_characteristic",
    "psi_class",
    "wall_degree",
    "Character",
    "GroupSpec",
    "GroupSpecError",
    "JuniorPoint",
    "LatticeContext",
    "build_lattice_context",
    "character_of",
    "junior_points",
    "parse_group_spec",
    "analyze",
]
