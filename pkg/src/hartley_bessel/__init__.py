"""Numerical toolkit for the Hartley-Bessel transform.

Kernel and transform evaluation on weighted quadrature grids, spectral
convolution, empirical certification of Hausdorff-Young and Young-type
norm inequalities, and a solver for the convolution integral equation
f + f * g = g * h.
"""

from .convolution import (
    check_associativity,
    check_banach_l1,
    check_young,
    convolve,
    factorization_residual,
)
from .errors import (
    GridMismatch,
    HartleyBesselError,
    InvalidConfig,
    InvalidExponent,
    NonConvergence,
    ReportNotSolvable,
)
from .inequalities import (
    ExponentTriple,
    InequalityReport,
    conjugate,
    hausdorff_young_constant,
    young_constant,
)
from .quadrature import (
    QuadratureGrid,
    SampledFunction,
    boundary_decay_ok,
    build_grid,
    corpus,
    grid_mass_closed_form,
    lanczos_gamma,
    lp_norm,
    make_test_function,
    measure_normalization,
    weighted_integral,
)
from .solver import (
    SolverReport,
    check_apriori_bound,
    residual,
    solve_integral_equation,
)
from .special import (
    KernelParams,
    cas,
    hartley_bessel_kernel,
    normalized_bessel,
    pochhammer,
)
from .transform import (
    SpectralFunction,
    TransformPlan,
    build_plan,
    check_hausdorff_young,
    forward_transform,
    inverse_transform,
    plancherel_defect,
    round_trip_error,
)

__all__ = [
    "ExponentTriple",
    "GridMismatch",
    "HartleyBesselError",
    "InequalityReport",
    "InvalidConfig",
    "InvalidExponent",
    "KernelParams",
    "NonConvergence",
    "QuadratureGrid",
    "ReportNotSolvable",
    "SampledFunction",
    "SolverReport",
    "SpectralFunction",
    "TransformPlan",
    "boundary_decay_ok",
    "build_grid",
    "build_plan",
    "cas",
    "check_apriori_bound",
    "check_associativity",
    "check_banach_l1",
    "check_hausdorff_young",
    "check_young",
    "conjugate",
    "convolve",
    "corpus",
    "factorization_residual",
    "forward_transform",
    "grid_mass_closed_form",
    "hartley_bessel_kernel",
    "hausdorff_young_constant",
    "inverse_transform",
    "lanczos_gamma",
    "lp_norm",
    "make_test_function",
    "measure_normalization",
    "normalized_bessel",
    "plancherel_defect",
    "pochhammer",
    "residual",
    "round_trip_error",
    "solve_integral_equation",
    "weighted_integral",
    "young_constant",
]

__version__ = "0.1.0"
