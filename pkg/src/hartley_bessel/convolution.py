"""Spectral convolution and certification of the Young-type bound.

The convolution is realized through the transform factorization
H(f * g) = H f . H g: transform both inputs, multiply pointwise on the
frequency grid, transform back.  The direct double-integral definition
needs a translation measure that is not available in closed form here, so
the spectral route is the only implementation and the factorization
identity holds exactly up to the discrete round-trip error.
"""

import numpy as np

from .errors import InvalidConfig
from .inequalities import InequalityReport, young_constant
from .quadrature import norm_values
from .transform import SpectralFunction, forward_transform, inverse_transform

PRIOR_CONSTANT = 4.0

_EPS = np.finfo(float).eps


def _require_positive_alpha(plan):
    if plan.grid.alpha <= 0:
        raise InvalidConfig(
            f"convolution requires alpha > 0, grid has alpha={plan.grid.alpha}"
        )


def convolve(plan, f, g):
    """f * g on the grid via transform, pointwise product, transform."""
    _require_positive_alpha(plan)
    F = forward_transform(plan, f)
    G = forward_transform(plan, g)
    product = F.values * G.values
    return inverse_transform(plan, SpectralFunction(plan.grid, product))


def factorization_residual(plan, f, g):
    """Relative L^2 gap between H(f * g) and H f . H g on the grid.

    Zero in exact arithmetic by construction; what remains measures the
    discrete self-inversion error.
    """
    _require_positive_alpha(plan)
    F = forward_transform(plan, f)
    G = forward_transform(plan, g)
    product = F.values * G.values
    H_conv = forward_transform(plan, convolve(plan, f, g))
    num = norm_values(H_conv.values - product, plan.grid, 2)
    den = norm_values(product, plan.grid, 2)
    return num / (den + _EPS)


def check_young(plan, f, g, triple, tol=1e-4, witness_ids=()):
    """Check ||f * g||_{r1} <= C ||f||_p ||g||_q for an admissible triple.

    Also records the same ratio against the prior constant 4 for
    comparison.
    """
    constant = young_constant(triple)
    conv = convolve(plan, f, g)
    lhs = norm_values(conv.values, plan.grid, triple.r1)
    norms = norm_values(f.values, plan.grid, triple.p) * norm_values(
        g.values, plan.grid, triple.q
    )
    rhs = constant * norms
    ratio = lhs / rhs if rhs > 0 else 0.0
    prior = lhs / (PRIOR_CONSTANT * norms) if norms > 0 else 0.0
    return InequalityReport(
        lhs=lhs,
        constant=constant,
        rhs=rhs,
        ratio=ratio,
        passed=ratio <= 1.0 + tol,
        p=triple.p,
        q=triple.q,
        r=triple.r,
        prior_ratio=prior,
        witness_ids=tuple(witness_ids),
    )


def check_banach_l1(plan, f, g, tol=1e-4, witness_ids=()):
    """Check the L^1 Banach-algebra bound ||f * g||_1 <= 4 ||f||_1 ||g||_1."""
    conv = convolve(plan, f, g)
    lhs = norm_values(conv.values, plan.grid, 1)
    norms = norm_values(f.values, plan.grid, 1) * norm_values(
        g.values, plan.grid, 1
    )
    rhs = PRIOR_CONSTANT * norms
    ratio = lhs / rhs if rhs > 0 else 0.0
    return InequalityReport(
        lhs=lhs,
        constant=PRIOR_CONSTANT,
        rhs=rhs,
        ratio=ratio,
        passed=ratio <= 1.0 + tol,
        p=1.0,
        q=1.0,
        r=1.0,
        prior_ratio=ratio,
        witness_ids=tuple(witness_ids),
    )


def check_associativity(plan, f, g, h):
    """Normalized L^1 defect of (f * g) * h against f * (g * h)."""
    left = convolve(plan, convolve(plan, f, g), h)
    right = convolve(plan, f, convolve(plan, g, h))
    num = norm_values(left.values - right.values, plan.grid, 1)
    den = norm_values(right.values, plan.grid, 1)
    return num / (den + _EPS)
