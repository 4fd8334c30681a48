"""Crooked planes and halfspaces in 2+1 Minkowski space."""

from ._crooked import (
    CrookedError,
    DomainError,
    Halfspace,
    ParseError,
    canonicalize,
    certify,
    classify,
    cross,
    disjointness_report,
    format_record,
    halfspaces_disjoint,
    inner,
    mesh_obj,
    null_frame,
    phi,
    planes_disjoint,
    vertex_path,
    zigzag_csv,
)

__all__ = [
    "CrookedError",
    "DomainError",
    "Halfspace",
    "ParseError",
    "canonicalize",
    "certify",
    "classify",
    "cross",
    "disjointness_report",
    "format_record",
    "halfspaces_disjoint",
    "inner",
    "mesh_obj",
    "null_frame",
    "phi",
    "planes_disjoint",
    "vertex_path",
    "zigzag_csv",
]
