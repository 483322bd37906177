"""Exact rational toolkit for linear Dirac structures on Lie algebras."""

from .errors import (
    Check,
    DiracalgError,
    JacobiError,
    NotAbelianError,
    NotAnIdealError,
    NotASubalgebraError,
    NotIntegrableError,
    NotLagrangianError,
    NotNInvariantError,
    NotSkewError,
    NotSurjectiveError,
    SandwichViolatedError,
    SearchSpaceTooLargeError,
)
from .ratlin import Matrix, Subspace, quotient_map
from .liealg import (
    LieAlgebra,
    abelian,
    direct_sum,
    heisenberg3,
    sl2,
    strictly_upper,
    upper_triangular,
)
from .dirac_linear import (
    Characteristic,
    DiracSubspace,
    PairedSpace,
    RangeFormPresentation,
    characteristic,
    enumerate_lagrangians,
    from_range_form,
    is_lagrangian,
    pair,
    pullback,
    reduce,
    to_range_form,
)
from .invariant import (
    courant_closure_check,
    cyclic_integrability,
    invariant_courant_bracket,
)
from .multiplicative import (
    CocycleData,
    DoubleAlgebra,
    DualBracket,
    abelian_fiber,
    abelian_multiplicativity_check,
    bracket_to_delta,
    build_double,
    cocycle_check,
    delta_to_bracket,
    gpart_identity_check,
    infinitesimal_action,
    integrability_check,
    n_invariance_check,
    ppart_identity_check,
)
from .homogeneous import (
    ClassificationReport,
    HomogeneousCandidate,
    classify,
    h_invariance_check,
    integrable_homogeneous_check,
    lift_dbar,
    quotient_dbar,
    sandwich_check,
    search_candidates,
)

__version__ = "0.1.0"
