"""Exact computations with polynomial Poisson algebras over Q."""
from .polycore import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
    elimination,
    variables,
)
from .groebner import (
    GroebnerBasis,
    NotZeroDimensionalError,
    buchberger,
    eliminate,
    is_member,
    is_zero_dimensional,
    normal_form,
    quotient_dimension,
)
from .bracket import (
    Check,
    JacobiError,
    NotPoissonIdealError,
    OreExtensionError,
    PoissonIdeal,
    PoissonStructure,
    alpha_derivation_check,
    bracket,
    from_potential,
    from_table,
    is_poisson_ideal,
    jacobi_check,
    linear_from_lie,
    ore_extend,
    poisson_ideal,
    poisson_points,
    quotient,
    relabel,
    skew_quadratic,
    symplectic,
    tensor,
    trivial,
    weyl,
)
from .center import CenterReport, center_basis, in_span, is_central
from .derivation import (
    Derivation,
    HigherDerivation,
    LNDSearch,
    LNDStatus,
    MLReport,
    RingMap,
    UncertifiedError,
    apply,
    automorphism_G,
    dt_higher_derivation,
    find_poisson_lnds,
    hamiltonian,
    higher_from_iterative,
    identity_map,
    is_higher_poisson,
    is_poisson_derivation,
    is_poisson_map,
    lnd_status,
    ml_kernel,
    poisson_derivation_space,
)
from .discriminant import (
    DiscriminantReport,
    EffectiveCertified,
    SingularLocus,
    Unknown,
    discriminant_poisson_points,
    effectiveness_certificate,
    singular_locus,
    squarefree_part,
    univariate_gcd,
)
from .parsing import AlgebraFile, ParseError, parse_algebra, parse_polynomial
from .skewiso import (
    IsoDecision,
    SkewMatrix,
    brute_force_permutation,
    cycle_notation,
    degree_one_principal_poisson,
    find_permutation,
    iso_decision,
    parse_matrix,
)

__version__ = "0.1.0"
