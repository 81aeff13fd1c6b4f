"""Solver for the convolution integral equation f + f * g = g * h.

Transforming both sides gives H f (1 + H g) = H g . H h, so whenever
1 + H g stays away from zero on the frequency grid the solution is
f = l * h with the multiplier l defined spectrally by
H l = H g / (1 + H g).  The solver refuses (reports non-solvable rather
than dividing) when the denominator dips below a threshold, since
near-zero denominators amplify discretization noise.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .convolution import convolve
from .errors import GridMismatch, ReportNotSolvable
from .inequalities import SQRT2, ExponentTriple, young_constant
from .quadrature import SampledFunction, lp_norm, norm_values
from .transform import forward_transform, inverse_transform, SpectralFunction

DENOM_THRESHOLD = 1e-6

# Factor by which min |1 + H g| must clear the threshold before the
# possibility of a zero crossing between grid nodes stops being flagged.
NEAR_SINGULAR_FACTOR = 10.0


@dataclass
class SolverReport:
    """Outcome of one solve: solution, multiplier, and diagnostics."""

    solvable: bool
    min_denominator: float
    denom_threshold: float
    near_singular_warning: bool
    solution_f: Optional[SampledFunction] = None
    multiplier_l: Optional[SampledFunction] = None
    residual_l1: Optional[float] = None
    bound_lhs: Optional[float] = None
    bound_rhs: Optional[float] = None
    data_g: Optional[SampledFunction] = field(default=None, repr=False)
    data_h: Optional[SampledFunction] = field(default=None, repr=False)
    bound_checks: dict = field(default_factory=dict)


def residual(plan, f, g, h):
    """L^1 norm of f + f * g - g * h on the grid."""
    defect = (
        f.values
        + convolve(plan, f, g).values
        - convolve(plan, g, h).values
    )
    return norm_values(defect, plan.grid, 1)


def solve_integral_equation(plan, g, h, denom_threshold=DENOM_THRESHOLD):
    """Solve f + f * g = g * h by spectral division.

    Returns a non-solvable report (no exception) when min |1 + H g| over
    the frequency nodes falls below the threshold.
    """
    if denom_threshold <= 0:
        raise ValueError("denom_threshold must be positive")
    for fn in (g, h):
        if not plan.grid.same_nodes(fn.grid):
            raise GridMismatch("g and h must live on the plan's grid")

    G = forward_transform(plan, g)
    denom = 1.0 + G.values
    min_denom = float(np.min(np.abs(denom)))
    warn = min_denom < NEAR_SINGULAR_FACTOR * denom_threshold
    if min_denom < denom_threshold:
        return SolverReport(
            solvable=False,
            min_denominator=min_denom,
            denom_threshold=denom_threshold,
            near_singular_warning=warn,
            data_g=g,
            data_h=h,
        )

    multiplier_spectrum = SpectralFunction(plan.grid, G.values / denom)
    ell = inverse_transform(plan, multiplier_spectrum)
    f = convolve(plan, ell, h)
    report = SolverReport(
        solvable=True,
        min_denominator=min_denom,
        denom_threshold=denom_threshold,
        near_singular_warning=warn,
        solution_f=f,
        multiplier_l=ell,
        residual_l1=residual(plan, f, g, h),
        bound_lhs=lp_norm(f, 1),
        bound_rhs=4.0 * lp_norm(ell, 1) * lp_norm(h, 1),
        data_g=g,
        data_h=h,
    )
    return report


def check_apriori_bound(report, triple=None, tol=1e-9):
    """Verify the solver's a-priori norm bounds on a solvable report.

    Checks ||f||_1 <= 4 ||l||_1 ||h||_1 plus the sqrt(2) refinements
    ||f||_2 <= sqrt(2) ||l||_2 ||h||_1 and
    ||f||_inf <= sqrt(2) ||l||_2 ||h||_2; with an admissible ``triple``
    also ||f||_{r1} <= C ||l||_p ||h||_q.  Individual outcomes land in
    ``report.bound_checks``; the return value is their conjunction.
    """
    if not report.solvable:
        raise ReportNotSolvable("a-priori bounds require a solvable report")
    f, ell, h = report.solution_f, report.multiplier_l, report.data_h

    checks = {
        "l1": report.bound_lhs <= report.bound_rhs * (1.0 + tol),
        "l2_from_l1": lp_norm(f, 2)
        <= SQRT2 * lp_norm(ell, 2) * lp_norm(h, 1) * (1.0 + tol),
        "sup_from_l2": lp_norm(f, math.inf)
        <= SQRT2 * lp_norm(ell, 2) * lp_norm(h, 2) * (1.0 + tol),
    }
    if triple is not None:
        if not isinstance(triple, ExponentTriple):
            triple = ExponentTriple(*triple)
        constant = young_constant(triple)
        checks["triple"] = lp_norm(f, triple.r1) <= constant * lp_norm(
            ell, triple.p
        ) * lp_norm(h, triple.q) * (1.0 + tol)
    report.bound_checks = checks
    return all(checks.values())
