"""Exact face numbers and angle sums of projected permutohedra and belt polytopes."""

from .angles import AngleSumTable, grassmann_mc_estimate, table_a, table_b, table_belt
from .arrangements import (
    Arrangement,
    braid_arrangement,
    characteristic_polynomial,
    lattice_of_flats,
    region_count,
    restriction,
    type_b_arrangement,
)
from .cones import HCone, dual_cone, intersects_nontrivially
from .exact_linalg import RationalMatrix, Subspace
from .kernels import BACKEND
from .permutohedra import PermutohedronA, PermutohedronB, enumerate_faces, face_vector
from .projection import (
    BeltPolytopeByArrangement,
    ProjectionSetup,
    count_projected_faces_formula,
    count_projected_faces_oracle,
    face_count_report,
)

__version__ = "0.1.0"

__all__ = [
    "AngleSumTable", "Arrangement", "BACKEND", "BeltPolytopeByArrangement", "HCone",
    "PermutohedronA", "PermutohedronB", "ProjectionSetup", "RationalMatrix", "Subspace",
    "braid_arrangement", "characteristic_polynomial", "count_projected_faces_formula",
    "count_projected_faces_oracle", "dual_cone", "enumerate_faces", "face_count_report",
    "face_vector", "grassmann_mc_estimate", "intersects_nontrivially", "lattice_of_flats",
    "region_count", "restriction", "table_a", "table_b", "table_belt", "type_b_arrangement",
]
