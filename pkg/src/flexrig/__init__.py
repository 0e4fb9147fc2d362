"""Flexible labelings of graphs: NAC-colorings, motions and movability."""
from .algebra import Point, Poly, RatFunc, coupled_unit, halfangle_unit, linear_solve, ratfunc_is_constant
from .graph import FlexGraph, automorphisms, catalog, from_integer, integer_encoding, triangle_components
from .motion import ParametricMotion, analyze_motion, fix_edge, grid_motion, grid_placement, spatial_motion
from .movable import (
    constant_distance_closure,
    has_injective_grid_construction,
    has_injective_spatial_embedding,
    movability_status,
    spatial_embedding,
    unicolor_pairs,
)
from .nac import (
    NacColoring,
    color_components,
    conjugate,
    has_nac_coloring,
    is_nac_coloring,
    isomorphism_classes,
    nac_colorings,
)
from .animation import animation_svg

__version__ = "0.1.0"

__all__ = [
    "Point", "Poly", "RatFunc", "coupled_unit", "halfangle_unit", "linear_solve", "ratfunc_is_constant",
    "FlexGraph", "automorphisms", "catalog", "from_integer", "integer_encoding", "triangle_components",
    "ParametricMotion", "analyze_motion", "fix_edge", "grid_motion", "grid_placement", "spatial_motion",
    "constant_distance_closure", "has_injective_grid_construction", "has_injective_spatial_embedding",
    "movability_status", "spatial_embedding", "unicolor_pairs",
    "NacColoring", "color_components", "conjugate", "has_nac_coloring", "is_nac_coloring",
    "isomorphism_classes", "nac_colorings", "animation_svg",
]
