"""Enumeration of triangulated closed surfaces."""

from ._core import (
    SurfenumError,
    canonical_form,
    classify,
    compute_root,
    counts,
    cross_validate,
    edge_expand_4valent,
    enumerate_all,
    euler_characteristic,
    format_triangulation,
    heawood_min_vertices,
    inverse_t_move,
    is_isomorphic,
    is_root,
    parse,
    reference_counts,
    t_move,
    validate,
)

__all__ = [
    "SurfenumError",
    "canonical_form",
    "classify",
    "compute_root",
    "counts",
    "cross_validate",
    "edge_expand_4valent",
    "enumerate_all",
    "euler_characteristic",
    "format_triangulation",
    "heawood_min_vertices",
    "inverse_t_move",
    "is_isomorphic",
    "is_root",
    "parse",
    "reference_counts",
    "t_move",
    "validate",
]
