"""Dimension and deficiency of varieties of form spaces with polar s-hedra.

Sigma(n, d, r, s) is the family of r-dimensional spaces of degree-d forms
in n+1 variables admitting a polar s-hedron. This package computes its
dimension by two independent exact methods over random large primes
(kernel of the grove constraint system, and rank of the power-sum
Jacobian), reports deficiencies against the parameter counts N1/N2, and
scans parameter ranges for deficient cases.
"""

from .engine import (
    DEFICIENCY_EVIDENCE,
    INCONCLUSIVE,
    NON_DEFICIENCY_PROVED,
    GroveCertificate,
    GroveElement,
    SigmaReport,
    analyze,
    expected_bounds,
    extract_groves,
)
from .grove_system import (
    Configuration,
    GroveSystem,
    ParameterError,
    build_grove_system,
    grove_kernel,
    grove_nullity,
    restricted_grove_nullity,
    sample_configuration,
    validate_tuple,
)
from .modp import MatrixFp, PrimeModulus, is_prime, nullspace, rank, sample_prime, subseed
from .poly import Form, LinearForm, MonomialBasis, apolar_apply, evaluate, monomial_basis, partial, power
from .powersum_jacobian import (
    DegenerateConfigurationError,
    PowerSumJacobian,
    build_powersum_jacobian,
    sigma_dim_from_jacobian,
)
from .special import (
    BalancedBlockMatrix,
    balanced_matrix,
    binary_splitting_nullity,
    segre_case_nullity,
    segre_embed,
    segre_grove_check,
    verify_binary_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "expected_bounds",
    "extract_groves",
    "sample_configuration",
    "grove_nullity",
    "restricted_grove_nullity",
    "build_grove_system",
    "grove_kernel",
    "build_powersum_jacobian",
    "sigma_dim_from_jacobian",
    "balanced_matrix",
    "binary_splitting_nullity",
    "verify_binary_theorem",
    "segre_embed",
    "segre_grove_check",
    "segre_case_nullity",
    "Configuration",
    "GroveSystem",
    "GroveCertificate",
    "GroveElement",
    "SigmaReport",
    "MatrixFp",
    "PrimeModulus",
    "MonomialBasis",
    "Form",
    "LinearForm",
    "ParameterError",
    "DegenerateConfigurationError",
    "PowerSumJacobian",
    "monomial_basis",
    "power",
    "evaluate",
    "partial",
    "apolar_apply",
    "is_prime",
    "sample_prime",
    "subseed",
    "rank",
    "nullspace",
    "NON_DEFICIENCY_PROVED",
    "DEFICIENCY_EVIDENCE",
    "INCONCLUSIVE",
]
