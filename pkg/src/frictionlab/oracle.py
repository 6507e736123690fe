"""Reference solutions of the Colebrook equation.

Two independent routes are provided:

* :func:`friction_reference` iterates the implicit equation directly;
* :func:`friction_exact_lambert` uses the closed form in terms of the
  Wright omega function, ``W(e**x) == omega(x)``.

The omega evaluator never forms ``e**x``; :func:`naive_w_exp` does, and
exists only to show where that overflows in binary64.
"""

from __future__ import annotations

import enum
import math
import sys

import numpy as np
from scipy.special import lambertw

from .core import FlowConditions, FrictionResult, MethodId, NumericError

LN10 = math.log(10.0)
# ln(R/2.51 * ln(10)/2) = ln(R) + _X_LOG_SHIFT
_X_LOG_SHIFT = math.log(LN10 / 2.0 / 2.51)
# R*eps/(2.51*3.71) * ln(10)/2 = R*eps * _X_LIN_COEF
_X_LIN_COEF = LN10 / 2.0 / (2.51 * 3.71)

OMEGA_MAX_ITER = 64
OMEGA_RTOL = 1e-15
FIXED_POINT_U0 = 10.0
FIXED_POINT_TOL = 1e-13
FIXED_POINT_MAX_ITER = 100

# exp(x) overflows binary64 above this
LN_DBL_MAX = math.log(sys.float_info.max)


class OverflowFlag(enum.Enum):
    """Marker returned when ``e**x`` cannot be stored in binary64."""

    OVERFLOW = "#VALUE!"

    def __str__(self):
        return self.value


OVERFLOW = OverflowFlag.OVERFLOW


def compute_x(cond: FlowConditions) -> float:
    """Argument of the Wright omega function for given flow conditions."""
    return _x_kernel(cond.reynolds, cond.relative_roughness)


def _log(z):
    return np.log(z) if isinstance(z, np.ndarray) else math.log(z)


def _x_kernel(re, eps):
    return _log(re) + _X_LOG_SHIFT + re * eps * _X_LIN_COEF


def series_y(x):
    """Three-term asymptotic series ``x - ln x + ln x / x`` for omega(x)."""
    lx = _log(x)
    return x - lx + lx / x


def wright_omega(x):
    """Wright omega function on the real branch, for ``x >= 1``.

    Solves ``w + ln(w) = x`` by Halley iteration seeded with
    :func:`series_y`. Accepts a float or an ndarray.

    Raises
    ------
    NumericError
        If any element fails to converge within 64 iterations.
    ValueError
        If ``x < 1`` (outside the supported branch segment).
    """
    shape = np.shape(x)
    xa = np.array(x, dtype=float).ravel()
    if np.any(~(xa >= 1.0)):
        raise ValueError("wright_omega is implemented for x >= 1 only")
    # Series can undershoot near x = 1; keep the seed on the positive branch.
    w = np.maximum(series_y(xa), 0.5)
    active = np.arange(xa.size)
    for _ in range(OMEGA_MAX_ITER):
        wa = w[active]
        g = wa + np.log(wa) - xa[active]
        dg = 1.0 + 1.0 / wa
        d2g = -1.0 / (wa * wa)
        step = g / (dg - 0.5 * g * d2g / dg)
        w[active] = wa - step
        active = active[np.abs(step) > OMEGA_RTOL * np.abs(w[active])]
        if active.size == 0:
            break
    else:
        raise NumericError("wright_omega did not converge", stage="omega")
    return float(w[0]) if shape == () else w.reshape(shape)


def _u_lambert_kernel(re, eps):
    log_term = _log(re) + _X_LOG_SHIFT
    omega = wright_omega(log_term + re * eps * _X_LIN_COEF)
    # omega - x == -ln(omega) exactly; avoids cancellation at large x
    return (2.0 / LN10) * (log_term - _log(omega))


def friction_exact_lambert(cond: FlowConditions) -> FrictionResult:
    """Colebrook solution through the Wright omega closed form."""
    u = _u_lambert_kernel(cond.reynolds, cond.relative_roughness)
    return FrictionResult.from_inverse_sqrt(u, MethodId.ORACLE_LAMBERT)


def _u_reference_kernel(re, eps):
    """Fixed-point iteration on ``u = -2 log10(2.51 u/R + eps/3.71)``.

    Works element-wise on arrays. One Newton step polishes the final iterate.
    """
    re = np.asarray(re, dtype=float)
    eps = np.asarray(eps, dtype=float)
    shape = np.broadcast(re, eps).shape
    re, eps = np.broadcast_to(re, shape), np.broadcast_to(eps, shape)
    u = np.full(shape, FIXED_POINT_U0).ravel()
    re_flat, rough = re.ravel(), eps.ravel() / 3.71
    # Each point stops on its own criterion, so the result does not depend
    # on how the grid is split into blocks.
    active = np.flatnonzero(np.isfinite(u))
    for _ in range(FIXED_POINT_MAX_ITER):
        ua = u[active]
        u_new = -2.0 * np.log10(2.51 * ua / re_flat[active] + rough[active])
        u[active] = u_new
        active = active[~(np.abs(u_new - ua) < FIXED_POINT_TOL)]
        if active.size == 0:
            break
    u = u.reshape(shape)
    rough = rough.reshape(shape)
    if active.size or not np.all(np.isfinite(u)):
        raise NumericError("Colebrook fixed-point iteration did not converge",
                           stage="fixed_point")
    inner = 2.51 * u / re + rough
    residual = u + 2.0 * np.log10(inner)
    slope = 1.0 + (2.0 / LN10) * (2.51 / re) / inner
    return u - residual / slope


def friction_reference(cond: FlowConditions) -> FrictionResult:
    """Colebrook solution by fixed-point iteration with a Newton polish."""
    u = _u_reference_kernel(cond.reynolds, cond.relative_roughness)
    return FrictionResult.from_inverse_sqrt(float(u), MethodId.ORACLE_FIXED_POINT)


def naive_w_exp(x: float) -> float | OverflowFlag:
    """``W(e**x)`` evaluated the direct way, by first forming ``e**x``.

    Returns :data:`OVERFLOW` when ``e**x`` is not representable.
    """
    if x > LN_DBL_MAX:
        return OVERFLOW
    try:
        t = math.exp(x)
    except OverflowError:
        return OVERFLOW
    return float(lambertw(t).real)
