"""braidlink: winding numbers and the second-order Hopf invariant of ordered
spherical 4-strand braids.

Braids enter as symbolic words (loop or Artin language) or as sampled strand
curves on the Riemann sphere; the library normalizes them by the unique
time-dependent Mobius map pinning strands 1-3 at 0, 1, infinity, and computes
first-order linking numbers and, on braids with zero total linking, the
integer Hopf invariant via branch-tracked line integrals.
"""

from .braid import (
    INFINITY,
    RiemannPoint,
    SphericalBraid,
    ValidationResult,
    act,
    chordal_distance,
    compose,
    eliminate_last,
    inverse,
    tilde,
    validate,
)
from .errors import (
    BraidlinkError,
    BranchTrackingError,
    ConsistencyError,
    ConvergenceError,
    DegenerateSampleError,
    GateError,
    NonPureWordError,
    NormalizationError,
    ValidationError,
    WordSyntaxError,
)
from .integrate import (
    LambdaProfile,
    QuadratureSettings,
    hopf_byparts,
    hopf_quadrature,
    lambda_profile,
    winding_discrete,
    winding_quadrature,
)
from .invariants import (
    InvariantReport,
    TotalLinking,
    TransformTable,
    hopf,
    is_brunn,
    lk,
    total_lk,
    transform_table,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .mobius import MobiusMap, NormalizedPath, apply, cross_ratio_map, normalize
from .permutations import Permutation, ThetaValue, all_permutations, theta
from .words import (
    BraidWord,
    LoopWord,
    parse_artin,
    parse_loop,
    realize_artin,
    realize_loop,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BraidlinkError",
    "BranchTrackingError",
    "ConsistencyError",
    "ConvergenceError",
    "DegenerateSampleError",
    "GateError",
    "INFINITY",
    "InvariantReport",
    "KERNEL_BACKEND",
    "LambdaProfile",
    "LoopWord",
    "MobiusMap",
    "NonPureWordError",
    "NormalizationError",
    "NormalizedPath",
    "Permutation",
    "QuadratureSettings",
    "RiemannPoint",
    "SphericalBraid",
    "ThetaValue",
    "TotalLinking",
    "TransformTable",
    "ValidationError",
    "ValidationResult",
    "WordSyntaxError",
    "act",
    "all_permutations",
    "apply",
    "chordal_distance",
    "compose",
    "cross_ratio_map",
    "eliminate_last",
    "hopf",
    "hopf_byparts",
    "hopf_quadrature",
    "inverse",
    "is_brunn",
    "lambda_profile",
    "lk",
    "normalize",
    "parse_artin",
    "parse_loop",
    "realize_artin",
    "realize_loop",
    "theta",
    "tilde",
    "total_lk",
    "transform_table",
    "validate",
    "winding_discrete",
    "winding_quadrature",
]
