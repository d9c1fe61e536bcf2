"""Exact analysis of almost contact B-metric structures on 3D Lie groups.

The pipeline runs from Bianchi bracket tables through the Levi-Civita
connection to the structure tensor F, its class decomposition and the
curvature of the canonical structure, with every quantity kept as an exact
polynomial in the family parameter h.
"""

from .connection import ConnectionCoefficients, levi_civita
from .curvature import Condition, CurvatureTensor, DegenerateSection, sectional
from .f_tensor import ClassLabel, ClassParameters, FTensor, NotAdmissible, classify, compute_F, decompose, reconstruct
from .lie_algebra import (
    BianchiId,
    JacobiError,
    StructureConstants,
    catalog_algebra,
    catalog_ids,
    check_jacobi,
    thurston_geometry,
)
from .report import Analysis, analyze
from .scalar import H, Domain, ExactRoot, Scalar
from .structure import AcbStructure, StructureError, canonical_structure
from .verify import run_checks

__version__ = "0.1.0"

__all__ = [
    "AcbStructure",
    "Analysis",
    "BianchiId",
    "ClassLabel",
    "ClassParameters",
    "Condition",
    "ConnectionCoefficients",
    "CurvatureTensor",
    "DegenerateSection",
    "Domain",
    "ExactRoot",
    "FTensor",
    "H",
    "JacobiError",
    "NotAdmissible",
    "Scalar",
    "StructureConstants",
    "StructureError",
    "analyze",
    "canonical_structure",
    "catalog_algebra",
    "catalog_ids",
    "check_jacobi",
    "classify",
    "compute_F",
    "decompose",
    "levi_civita",
    "reconstruct",
    "run_checks",
    "sectional",
    "thurston_geometry",
]
