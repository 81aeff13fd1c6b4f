import math

import numpy as np
import pytest

from hartley_bessel.convolution import convolve
from hartley_bessel.errors import GridMismatch, ReportNotSolvable
from hartley_bessel.quadrature import (
    SampledFunction,
    build_grid,
    lp_norm,
    make_test_function,
)
from hartley_bessel.solver import (
    check_apriori_bound,
    residual,
    solve_integral_equation,
)
from hartley_bessel.transform import forward_transform


@pytest.fixture(scope="module")
def manufactured(small_plan):
    """Known-solution data for f + f*g = g*h.

    With h = w + w*g the exact solution is f = g*w, because
    H f (1 + H g) = H g . H h  collapses to  H f = H g . H w.
    """
    grid = small_plan.grid
    w = make_test_function("gaussian", [1.0], grid)
    g = SampledFunction(grid, 0.05 * np.exp(-grid.nodes**2))
    h = SampledFunction(
        grid, w.values + convolve(small_plan, w, g).values
    )
    f_exact = convolve(small_plan, g, w)
    return g, h, f_exact


def test_manufactured_recovery(small_plan, manufactured):
    g, h, f_exact = manufactured
    report = solve_integral_equation(small_plan, g, h)
    assert report.solvable
    assert not report.near_singular_warning
    err = lp_norm(
        SampledFunction(
            small_plan.grid, report.solution_f.values - f_exact.values
        ),
        1,
    ) / lp_norm(f_exact, 1)
    assert err < 1e-10
    assert report.residual_l1 < 1e-12
    # independent recomputation of the defect
    assert residual(
        small_plan, report.solution_f, g, h
    ) == pytest.approx(report.residual_l1)


def test_apriori_bounds(small_plan, manufactured):
    g, h, _ = manufactured
    report = solve_integral_equation(small_plan, g, h)
    assert check_apriori_bound(report, triple=(2.0, 2.0, 1.0))
    assert report.bound_checks == {
        "l1": True, "l2_from_l1": True, "sup_from_l2": True, "triple": True,
    }
    assert report.bound_lhs <= report.bound_rhs


def test_zero_rhs_gives_zero_solution(small_plan, manufactured):
    g, _, _ = manufactured
    zero = SampledFunction(small_plan.grid, np.zeros(small_plan.grid.size))
    report = solve_integral_equation(small_plan, g, zero)
    assert report.solvable
    assert np.max(np.abs(report.solution_f.values)) < 1e-14


def _near_singular_g(plan, shrink=0.0):
    """g with min |1 + H g| = shrink: spectrum pinned to -1 at one node."""
    base = make_test_function("gaussian", [0.5], plan.grid)
    B = forward_transform(plan, base)
    j = int(np.argmax(np.abs(B.values)))
    scale = -(1.0 - shrink) / B.values[j]
    return SampledFunction(plan.grid, scale * base.values)


def test_not_solvable_report(small_plan):
    g = _near_singular_g(small_plan)
    h = make_test_function("gaussian", [1.0], small_plan.grid)
    report = solve_integral_equation(small_plan, g, h)
    assert not report.solvable
    assert report.min_denominator < report.denom_threshold
    assert report.near_singular_warning
    assert report.solution_f is None
    with pytest.raises(ReportNotSolvable):
        check_apriori_bound(report)


def test_near_singular_warning_when_marginal(small_plan):
    g = _near_singular_g(small_plan, shrink=5e-6)
    h = make_test_function("gaussian", [1.0], small_plan.grid)
    report = solve_integral_equation(small_plan, g, h, denom_threshold=1e-6)
    assert report.solvable
    assert report.near_singular_warning
    assert math.isclose(report.min_denominator, 5e-6, rel_tol=1e-6)


def test_solver_input_validation(small_plan, manufactured):
    g, h, _ = manufactured
    with pytest.raises(ValueError):
        solve_integral_equation(small_plan, g, h, denom_threshold=0.0)
    other = build_grid(1.0, 10.0, 40, 3)
    g_other = make_test_function("gaussian", [1.0], other)
    with pytest.raises(GridMismatch):
        solve_integral_equation(small_plan, g_other, h)
