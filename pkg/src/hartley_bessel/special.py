"""Normalized Bessel series, the cas function, and the Hartley-Bessel kernel.

The kernel J(lambda, x; alpha) = B_{alpha-1/2}(lambda x)
+ (lambda x / (2 alpha + 1)) B_{alpha+1/2}(lambda x) generalizes
cas(x) = cos(x) + sin(x); it reduces to cas(lambda x) at alpha = 0 and obeys
the uniform bound |J| <= sqrt(2) for alpha >= 0.

B_nu is the even power series sum_n (-1)^n / (n! (nu+1)_n) (x/2)^(2n),
equal to Gamma(nu+1) (2/x)^nu J_nu(x) in terms of the standard Bessel
function.  The alternating series is numerically healthy only for small
arguments (terms grow to ~1e20 by |x| = 50, destroying double precision),
so evaluation switches to the closed form through scipy's J_nu beyond
SERIES_CUTOFF.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as _gamma
from scipy.special import jv as _besselj

from .errors import InvalidConfig, NonConvergence

# Largest |x| the plain double series handles; beyond this a compensated
# double-double series takes over until COMPENSATED_CUTOFF, then the
# closed-form Bessel route.  The staging keeps the relative error near
# 1e-15 even close to zeros of B, where cancellation in the alternating
# series (or in scipy's J_nu) would otherwise eat digits.
SERIES_CUTOFF = 5.0
COMPENSATED_CUTOFF = 30.0

# Hard cap on |lambda * x|; scipy's J_nu stays accurate far beyond any
# grid this toolkit builds (R <= 20 gives products <= 400).
DOMAIN_LIMIT = 1.0e6

_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class KernelParams:
    """Order parameter and series truncation controls for kernel evaluation."""

    alpha: float
    series_tol: float = 1e-14
    max_terms: int = 80

    def __post_init__(self):
        if self.alpha < 0:
            raise InvalidConfig(f"alpha must be >= 0, got {self.alpha}")
        if not 0 < self.series_tol <= 1e-10:
            raise InvalidConfig(
                f"series_tol must lie in (0, 1e-10], got {self.series_tol}"
            )
        if self.max_terms < 30:
            raise InvalidConfig(f"max_terms must be >= 30, got {self.max_terms}")


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0."""
    if n < 0:
        raise InvalidConfig(f"n must be a nonnegative integer, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def cas(x):
    """cos(x) + sin(x), the classical Hartley kernel."""
    return np.cos(x) + np.sin(x)


def _series(nu, u, tol, max_terms):
    """Direct summation of the normalized Bessel series on small arguments.

    ``u`` is a 1-d array of nonnegative values <= SERIES_CUTOFF.  Truncation
    requires two consecutive terms below tol * (|partial sum| + tiny), which
    guards against a single accidentally small term in an alternating series.
    """
    q = -(u * u) / 4.0
    term = np.ones_like(u)
    total = np.ones_like(u)
    below_prev = np.zeros(u.shape, dtype=bool)
    for n in range(max_terms):
        term = term * q / ((n + 1.0) * (nu + 1.0 + n))
        total += term
        below = np.abs(term) <= tol * (np.abs(total) + _TINY)
        if np.all(below & below_prev):
            return total
        below_prev = below
    raise NonConvergence(
        f"normalized Bessel series (nu={nu}) did not converge within "
        f"{max_terms} terms"
    )


# Double-double helpers (Dekker/Knuth error-free transforms), vectorized.
# A value is carried as an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.

_SPLITTER = 134217729.0  # 2^27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_renorm(h, l):
    s = h + l
    return s, l - (s - h)


def _dd_add(xh, xl, yh, yl):
    sh, se = _two_sum(xh, yh)
    return _dd_renorm(sh, se + (xl + yl))


def _dd_mul(xh, xl, yh, yl):
    ph, pe = _two_prod(xh, yh)
    return _dd_renorm(ph, pe + (xh * yl + xl * yh))


def _dd_div(xh, xl, yh, yl):
    q1 = xh / yh
    th, tl = _dd_mul(q1, np.zeros_like(q1), yh, yl)
    rh, rl = _dd_add(xh, xl, -th, -tl)
    q2 = rh / yh
    th, tl = _dd_mul(q2, np.zeros_like(q2), yh, yl)
    rh, rl = _dd_add(rh, rl, -th, -tl)
    qh, ql = _two_sum(q1, q2)
    return _dd_renorm(qh, ql + rh / yh)


def _series_compensated(nu, u, max_terms=300):
    """Double-double summation of the series for mid-range arguments.

    Terms grow to ~e^u before decaying, so the alternating sum cancels
    about u/ln(10) digits; carrying ~32 digits keeps the double-rounded
    result accurate through u = COMPENSATED_CUTOFF.  The per-term divisor
    (n+1)(nu+1+n) depends only on n, so its double-double reciprocal is
    precomputed as a scalar and applied with one broadcast multiply.
    """
    zero = np.zeros(1)
    one = np.ones(1)
    nu1h, nu1l = _two_sum(np.full(1, float(nu)), 1.0)

    half = u / 2.0
    qh, ql = _two_prod(half, half)
    qh, ql = -qh, -ql
    th = np.ones_like(u)
    tl = np.zeros_like(u)
    sh = np.ones_like(u)
    sl = np.zeros_like(u)
    below_prev = np.zeros(u.shape, dtype=bool)
    for n in range(max_terms):
        ah, al = _dd_add(nu1h, nu1l, np.full(1, float(n)), zero)
        dh, dl = _dd_mul(ah, al, np.full(1, float(n + 1)), zero)
        rh, rl = _dd_div(one, zero, dh, dl)
        mh, ml = _dd_mul(qh, ql, rh[0], rl[0])
        th, tl = _dd_mul(th, tl, mh, ml)
        sh, sl = _dd_add(sh, sl, th, tl)
        below = np.abs(th) <= 1e-33 * (np.abs(sh) + _TINY)
        if np.all(below & below_prev):
            break
        below_prev = below
    else:
        raise NonConvergence(
            f"compensated Bessel series (nu={nu}) did not converge within "
            f"{max_terms} terms"
        )
    return sh + sl


def normalized_bessel(alpha, x, params=None, compensated=True):
    """Evaluate B_alpha(x), even in x, to near machine precision.

    Small arguments use the power series with term recursion
    term_{n+1} = term_n * (-(x/2)^2) / ((n+1)(alpha+1+n)); larger ones the
    closed form Gamma(alpha+1) (2/x)^alpha J_alpha(x).  In between, the
    series cancels heavily and the closed form loses relative accuracy near
    Bessel zeros, so by default the series is resummed in double-double
    arithmetic there.  Pass compensated=False to use the closed form for
    the whole tail instead: absolute accuracy stays at machine level and
    bulk evaluation (e.g. kernel matrices) runs orders of magnitude faster.
    Accepts scalars or arrays.  Raises NonConvergence when |x| exceeds the
    supported domain or the series stalls.
    """
    if alpha <= -1:
        raise InvalidConfig(f"order must exceed -1, got {alpha}")
    tol = params.series_tol if params is not None else 1e-14
    max_terms = params.max_terms if params is not None else 80

    u = np.abs(np.asarray(x, dtype=float))
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    if np.any(u > DOMAIN_LIMIT):
        raise NonConvergence(
            f"argument magnitude {np.max(u):g} exceeds the supported domain "
            f"{DOMAIN_LIMIT:g}"
        )

    out = np.empty_like(u)
    small = u <= SERIES_CUTOFF
    if np.any(small):
        out[small] = _series(alpha, u[small], tol, max_terms)
    mid = ~small & (u <= COMPENSATED_CUTOFF)
    if np.any(mid):
        if compensated:
            out[mid] = _series_compensated(alpha, u[mid])
        else:
            um = u[mid]
            out[mid] = (
                _gamma(alpha + 1.0) * (2.0 / um) ** alpha
                * _besselj(alpha, um)
            )
    big = u > COMPENSATED_CUTOFF
    if np.any(big):
        ub = u[big]
        out[big] = _gamma(alpha + 1.0) * (2.0 / ub) ** alpha * _besselj(alpha, ub)
    return float(out[0]) if scalar else out


def hartley_bessel_kernel(lam, x, params, compensated=True):
    """Hartley-Bessel kernel J(lambda, x; alpha); depends only on lambda * x.

    Accepts scalar or broadcastable array arguments; propagates
    NonConvergence from the underlying series.  The kernel is O(1), so
    callers that only need absolute accuracy (kernel matrices) may pass
    compensated=False for speed.
    """
    alpha = params.alpha
    u = np.asarray(lam, dtype=float) * np.asarray(x, dtype=float)
    scalar = u.ndim == 0
    first = normalized_bessel(alpha - 0.5, u, params, compensated=compensated)
    second = normalized_bessel(alpha + 0.5, u, params, compensated=compensated)
    out = first + u / (2.0 * alpha + 1.0) * np.asarray(second)
    return float(out) if scalar else out
