import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hartley_bessel.errors import InvalidConfig, NonConvergence
from hartley_bessel.special import (
    COMPENSATED_CUTOFF,
    DOMAIN_LIMIT,
    SERIES_CUTOFF,
    KernelParams,
    cas,
    hartley_bessel_kernel,
    normalized_bessel,
    pochhammer,
)


def test_kernel_params_validation():
    KernelParams(alpha=0.0)
    with pytest.raises(InvalidConfig):
        KernelParams(alpha=-0.1)
    with pytest.raises(InvalidConfig):
        KernelParams(alpha=1.0, series_tol=0.0)
    with pytest.raises(InvalidConfig):
        KernelParams(alpha=1.0, series_tol=1e-9)
    with pytest.raises(InvalidConfig):
        KernelParams(alpha=1.0, max_terms=10)


def test_pochhammer_values():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 4) == 3 * 4 * 5 * 6
    assert pochhammer(0.5, 2) == pytest.approx(0.5 * 1.5)


def test_cas_is_cos_plus_sin():
    x = np.linspace(-5, 5, 11)
    np.testing.assert_allclose(cas(x), np.cos(x) + np.sin(x), rtol=0, atol=0)


# B_{-1/2}(x) = cos(x) and B_{1/2}(x) = sin(x)/x are exact closed forms
# that exercise all three evaluation bands.
@pytest.mark.parametrize(
    "band_x",
    [
        np.linspace(0.01, SERIES_CUTOFF - 0.1, 40),
        np.linspace(SERIES_CUTOFF + 0.1, COMPENSATED_CUTOFF - 0.1, 40),
        np.linspace(COMPENSATED_CUTOFF + 0.1, 120.0, 40),
    ],
    ids=["series", "compensated", "closed_form"],
)
def test_half_integer_closed_forms(band_x):
    got_cos = normalized_bessel(-0.5, band_x)
    np.testing.assert_allclose(got_cos, np.cos(band_x), rtol=0, atol=5e-14)
    got_sinc = normalized_bessel(0.5, band_x)
    np.testing.assert_allclose(
        got_sinc, np.sin(band_x) / band_x, rtol=0, atol=5e-14
    )


def test_value_at_zero_is_one():
    for alpha in (-0.5, 0.0, 0.7, 2.5, 5.0):
        assert normalized_bessel(alpha, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_even_in_x():
    x = np.linspace(0.1, 40.0, 57)
    for alpha in (0.0, 1.3, 4.0):
        a = normalized_bessel(alpha, x)
        b = normalized_bessel(alpha, -x)
        np.testing.assert_array_equal(a, b)


def test_band_continuity():
    # Values straddling the band cutoffs must agree to near machine level
    # (offset small enough that the function's own slope cannot matter).
    for alpha in (0.0, 0.75, 3.0):
        for cut in (SERIES_CUTOFF, COMPENSATED_CUTOFF):
            lo = normalized_bessel(alpha, cut * (1 - 1e-12))
            hi = normalized_bessel(alpha, cut * (1 + 1e-12))
            assert abs(hi - lo) < 1e-10


def test_fast_path_matches_compensated():
    x = np.linspace(SERIES_CUTOFF + 0.2, COMPENSATED_CUTOFF, 80)
    for alpha in (0.0, 1.5, 4.5):
        slow = normalized_bessel(alpha, x, compensated=True)
        fast = normalized_bessel(alpha, x, compensated=False)
        np.testing.assert_allclose(fast, slow, rtol=0, atol=1e-13)


def test_domain_and_order_errors():
    with pytest.raises(NonConvergence):
        normalized_bessel(1.0, DOMAIN_LIMIT * 2)
    with pytest.raises(InvalidConfig):
        normalized_bessel(-1.5, 1.0)


def test_kernel_reduces_to_cas_at_alpha_zero():
    params = KernelParams(alpha=0.0)
    lam = np.linspace(-10, 10, 101)
    x = 0.73
    k = hartley_bessel_kernel(lam, x, params)
    np.testing.assert_allclose(k, cas(lam * x), rtol=0, atol=1e-12)


def test_kernel_scalar_and_symmetry():
    params = KernelParams(alpha=1.5)
    v = hartley_bessel_kernel(2.0, 3.0, params)
    assert isinstance(v, float)
    # depends only on the product lambda * x
    assert v == pytest.approx(hartley_bessel_kernel(3.0, 2.0, params))
    assert v == pytest.approx(hartley_bessel_kernel(6.0, 1.0, params))


@settings(max_examples=200, deadline=None)
@given(
    alpha=st.floats(min_value=0.0, max_value=5.0),
    u=st.floats(min_value=-200.0, max_value=200.0),
)
def test_kernel_uniform_bound_property(alpha, u):
    params = KernelParams(alpha=alpha)
    val = hartley_bessel_kernel(u, 1.0, params)
    assert abs(val) <= math.sqrt(2.0) + 1e-10


@settings(max_examples=200, deadline=None)
@given(
    alpha=st.floats(min_value=-0.5, max_value=5.0),
    x=st.floats(min_value=-100.0, max_value=100.0),
)
def test_normalized_bessel_bounded_by_one(alpha, x):
    assert abs(normalized_bessel(alpha, x)) <= 1.0 + 1e-12
