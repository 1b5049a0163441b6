"""Exact construction and verification of three-qubit Kochen-Specker parity proofs."""

from .construction import ConstructionResult, construct_11, construct_13, construct_15, trace_render
from .enumeration import cross_check_constructions, enumerate_parity_proofs, gf2_kernel, incidence_matrix
from .geometry import Geometry, default_geometry, derive_gamma_table, enumerate_bases, gamma, hybrids_covering
from .parity import Signature, find_coloring, is_parity_proof, ray_multiplicities, signature
from .pauli import Observable, PauliWord, commutes, mermin_pentagram, pentagram_operator_contradiction, tensor_matrix
from .rays import Ray, RayTable, build_ray_table, canonicalize, inner_product, joint_eigenrays

__version__ = "0.1.0"

__all__ = [
    "ConstructionResult",
    "Geometry",
    "Observable",
    "PauliWord",
    "Ray",
    "RayTable",
    "Signature",
    "build_ray_table",
    "canonicalize",
    "commutes",
    "construct_11",
    "construct_13",
    "construct_15",
    "cross_check_constructions",
    "default_geometry",
    "derive_gamma_table",
    "enumerate_bases",
    "enumerate_parity_proofs",
    "find_coloring",
    "gamma",
    "gf2_kernel",
    "hybrids_covering",
    "incidence_matrix",
    "inner_product",
    "is_parity_proof",
    "joint_eigenrays",
    "mermin_pentagram",
    "pentagram_operator_contradiction",
    "ray_multiplicities",
    "signature",
    "tensor_matrix",
    "trace_render",
]
