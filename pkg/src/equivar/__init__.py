"""Exact invariant theory for finite rational matrix groups.

Compute generators of invariant polynomial rings, module generators of
equivariant polynomial vector fields, and reductions of invariant dynamics
to the orbit space, all in exact rational arithmetic.
"""

from .actions import (
    ACTIONS,
    PHI_DAGGER,
    PSI,
    THETA,
    InvarianceCheck,
    PolyVectorField,
    act_phi_dagger,
    act_psi,
    act_theta,
    infer_action,
    is_invariant,
    is_xi_linear,
    pairing,
    reynolds,
    unpairing,
)
from .equivariants import (
    EquivariantGens,
    equivariant_basis,
    equivariant_module_generators,
    express_equivariant,
    xilinear_monomials,
)
from .errors import (
    ClosureExceedsCap,
    DimensionMismatch,
    DimensionMismatchWithMolien,
    EquivarError,
    NonFiniteState,
    NonInvertibleGenerator,
    NoSolution,
    NotInvariant,
    NotXiLinear,
    ParseError,
)
from .groups import DEFAULT_CAP, MatGroup, close_group
from .invariants import (
    InvariantGens,
    RelationSet,
    express,
    hilbert_map_eval,
    invariant_basis,
    invariant_ring_generators,
    power_product,
    relations,
    weighted_monomials,
)
from .linalg import RatMatrix, block_diag
from .molien import MolienSeries, molien, molien_equivariant
from .poly import MultiPoly, grlex_key, monomials_of_degree, variables
from .reduction import (
    RelatednessCheck,
    ReducedSystem,
    TrajectoryReport,
    check_related,
    directional_derivatives,
    integrate_pair,
    reduce_field,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIONS",
    "PHI_DAGGER",
    "PSI",
    "THETA",
    "ClosureExceedsCap",
    "DEFAULT_CAP",
    "DimensionMismatch",
    "DimensionMismatchWithMolien",
    "EquivarError",
    "EquivariantGens",
    "InvarianceCheck",
    "InvariantGens",
    "MatGroup",
    "MolienSeries",
    "MultiPoly",
    "NoSolution",
    "NonFiniteState",
    "NonInvertibleGenerator",
    "NotInvariant",
    "NotXiLinear",
    "ParseError",
    "PolyVectorField",
    "RatMatrix",
    "ReducedSystem",
    "RelatednessCheck",
    "RelationSet",
    "TrajectoryReport",
    "act_phi_dagger",
    "act_psi",
    "act_theta",
    "block_diag",
    "check_related",
    "close_group",
    "directional_derivatives",
    "equivariant_basis",
    "equivariant_module_generators",
    "express",
    "express_equivariant",
    "grlex_key",
    "hilbert_map_eval",
    "infer_action",
    "integrate_pair",
    "invariant_basis",
    "invariant_ring_generators",
    "is_invariant",
    "is_xi_linear",
    "molien",
    "molien_equivariant",
    "monomials_of_degree",
    "pairing",
    "power_product",
    "reduce_field",
    "relations",
    "reynolds",
    "unpairing",
    "variables",
    "weighted_monomials",
    "xilinear_monomials",
]
