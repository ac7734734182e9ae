"""Bicomplex numbers, operators on bicomplex Hilbert modules and composition operators on the bicomplex Hardy space."""

from .algebra import (
    DEFAULT_TOL,
    E1,
    E2,
    I,
    J,
    K,
    NULL_CONE_TOL,
    ONE,
    ZERO,
    Bicomplex,
    Hyperbolic,
    Tolerance,
    conj1,
    conj2,
    conj3,
    euclid_norm,
    from_cartesian,
    hyp_leq,
    hyp_sqrt,
    inverse,
    is_null_cone,
    modulus_i,
    modulus_j,
    modulus_k,
    to_cartesian,
)
from .duality import (
    Functional,
    Submodule,
    annihilator,
    check_dual_isometries,
    extend_functional,
    project,
    quotient_norm,
    submodule_from_generators,
)
from .hardy import (
    BCPowerSeries,
    SelfMap,
    WeightSequence,
    blaschke_self_map,
    cayley,
    cayley_inverse,
    compose,
    composition_matrix,
    evaluate,
    hardy_inner,
    hardy_norm,
    littlewood_bound,
    mobius_series,
    seq_embed,
    seq_norm,
)
from .linalg import (
    BCMatrix,
    BCVector,
    OperatorNormReport,
    adjoint,
    cartesian_normal_check,
    dnorm_vec,
    euclid_vec,
    inner_product,
    is_normal,
    is_positive,
    is_self_adjoint,
    is_unitary,
    is_zero_operator,
    op_dnorm,
)

__version__ = "0.1.0"
