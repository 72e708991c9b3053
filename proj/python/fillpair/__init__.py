"""Minimal filling pairs on the genus-two surface.

Thin python surface over the C++ core: fat-graph boundary words, exhaustive
enumeration of minimal filling pair fat graphs, and the hyperbolic length
bounds for the {8,8} and {4,12} face types.
"""

from fillpair._core import (
    FatGraph,
    classify_orbits,
    enumerate_face_configs,
    enumerate_raw,
    f8,
    f8_derivative,
    g_residuals,
    global_bound,
    length_bound_412,
    length_bound_88,
    minimize_f8,
    minimize_objective,
    optimum_multipliers,
    optimum_point,
    polygon_area,
    regular_polygon_perimeter,
    solve_at_theta,
    triangle_side,
    verify_lagrange,
)

__all__ = [
    "FatGraph",
    "classify_orbits",
    "enumerate_face_configs",
    "enumerate_raw",
    "f8",
    "f8_derivative",
    "g_residuals",
    "global_bound",
    "length_bound_412",
    "length_bound_88",
    "minimize_f8",
    "minimize_objective",
    "optimum_multipliers",
    "optimum_point",
    "polygon_area",
    "regular_polygon_perimeter",
    "solve_at_theta",
    "triangle_side",
    "verify_lagrange",
]
