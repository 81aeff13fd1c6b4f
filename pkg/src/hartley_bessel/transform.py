"""Dense-matrix application of the Hartley-Bessel transform.

The transform of f is the integral of f against the kernel with respect to
the weighted measure; discretely, a dense matrix K[j, i] = J(lambda_j, x_i)
applied to weight-scaled samples.  The frequency grid equals the spatial
grid, which makes the matrix symmetric (the kernel depends only on
lambda * x) and keeps the transform its own inverse.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatch, InvalidExponent
from .inequalities import InequalityReport, conjugate, hausdorff_young_constant
from .quadrature import QuadratureGrid, SampledFunction, norm_values
from .special import KernelParams, hartley_bessel_kernel


@dataclass
class SpectralFunction:
    """Transform values on the frequency grid (the spatial grid itself)."""

    freq_grid: QuadratureGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != self.freq_grid.nodes.shape:
            raise GridMismatch("spectral values do not match the frequency grid")
        self.values = vals


@dataclass(frozen=True)
class TransformPlan:
    """Precomputed kernel matrix for one grid and parameter set."""

    grid: QuadratureGrid
    kernel_matrix: np.ndarray
    params: KernelParams


def build_plan(grid, params=None):
    """Populate the dense kernel matrix for a grid.

    The matrix is built from the outer product of the nodes, so symmetry
    on a self-dual grid is bitwise.
    """
    if params is None:
        params = KernelParams(alpha=grid.alpha)
    matrix = hartley_bessel_kernel(
        grid.nodes[:, None], grid.nodes[None, :], params, compensated=False
    )
    matrix.setflags(write=False)
    return TransformPlan(grid=grid, kernel_matrix=matrix, params=params)


def _require_grid(plan, f):
    grid = f.freq_grid if isinstance(f, SpectralFunction) else f.grid
    if not plan.grid.same_nodes(grid):
        raise GridMismatch("function does not live on the plan's grid")


def forward_transform(plan, f):
    """Apply the transform: (H f)(lambda_j) = sum_i K[j,i] f(x_i) w_i."""
    _require_grid(plan, f)
    vals = plan.kernel_matrix @ (f.values * plan.grid.mu_weights)
    return SpectralFunction(plan.grid, vals)


def inverse_transform(plan, F):
    """Invert by reapplying the transform; it is its own inverse."""
    _require_grid(plan, F)
    vals = plan.kernel_matrix @ (F.values * plan.grid.mu_weights)
    return SampledFunction(plan.grid, vals)


def round_trip_error(plan, f):
    """Relative L^2 error of inverse(forward(f)) against f."""
    back = inverse_transform(plan, forward_transform(plan, f))
    num = norm_values(back.values - f.values, plan.grid, 2)
    den = norm_values(f.values, plan.grid, 2)
    return num / den if den > 0 else num


def check_hausdorff_young(plan, f, p, tol=1e-6, witness_ids=()):
    """Check ||H f||_{p1} <= sqrt(2)^(2/p - 1) ||f||_p on the grid."""
    if not 1.0 <= p <= 2.0:
        raise InvalidExponent(f"p must lie in [1, 2], got {p}")
    p1 = conjugate(p)
    F = forward_transform(plan, f)
    lhs = norm_values(F.values, plan.grid, p1)
    constant = hausdorff_young_constant(p)
    rhs = constant * norm_values(f.values, plan.grid, p)
    ratio = lhs / rhs if rhs > 0 else 0.0
    return InequalityReport(
        lhs=lhs,
        constant=constant,
        rhs=rhs,
        ratio=ratio,
        passed=ratio <= 1.0 + tol,
        p=p,
        witness_ids=tuple(witness_ids),
    )


def plancherel_defect(plan, f):
    """| ||H f||_2 - ||f||_2 | / ||f||_2; zero in the continuum."""
    F = forward_transform(plan, f)
    nf = norm_values(f.values, plan.grid, 2)
    nF = norm_values(F.values, plan.grid, 2)
    return abs(nF - nf) / nf if nf > 0 else abs(nF)

