"""Logarithm-free evaluation of ``B = ln(R) - 0.779397488``.

``ln(r)`` with ``r = R / 315012.6`` is replaced by its /2,3/ Pade
approximant ``s(r)`` about ``r = 1``; rational corrections in ``r`` and
``s`` then bring the error on B below 0.08 % for 4000 <= R <= 1e8.
"""

from __future__ import annotations

import math

from ._ops import MathOps
from .core import FlowConditions, FrictionResult, InputError, MethodId
from .omega_approx import A_DIVISOR, U_SCALE, _bracket_eq3

R_SCALE = 315012.6
B_OFFSET = 11.881  # ln(315012.6) - ln(2 * 2.51 / ln 10)

R_LOW = 4000.0
R_HIGH = 1e8

_MATH = MathOps()


def compute_r(reynolds: float) -> float:
    if not reynolds > 0:
        raise InputError(f"reynolds must be > 0, got {reynolds!r}")
    return reynolds / R_SCALE


def pade_s(r):
    """/2,3/ Pade approximant of ``ln(r)`` at ``r = 1``, in nested form."""
    num = r * (r * (11.0 * r + 27.0) - 27.0) - 11.0
    den = r * (r * (3.0 * r + 27.0) + 27.0) + 3.0
    return num / den


def reconstruct_ln_reynolds(reynolds: float) -> float:
    """``ln(R)`` rebuilt as ``s(R / 315012.6) + ln(315012.6)``."""
    return pade_s(compute_r(reynolds)) + math.log(R_SCALE)


def _check_range(reynolds):
    if not R_LOW <= reynolds <= R_HIGH:
        raise InputError(
            f"rational B is only valid for 4000 <= R <= 1e8, got {reynolds!r}"
        )


def _b_rational(r):
    s = pade_s(r)
    s2 = s * s
    s7 = s2 * s2 * s2 * s
    return (0.98236 * s + s7 / 9200.67 + r / 150.2325
            - r * r / 138187.1651 - 1.0 / (161.124 * r) + B_OFFSET)


def _b_horner(r):
    s = pade_s(r)
    s2 = s * s
    s6 = s2 * s2 * s2
    return (s * (0.0001086 * s6 + 0.9824) - 0.006206 / r
            - r * (0.000007237 * r - 0.006656) + B_OFFSET)


def compute_b_rational(reynolds: float) -> float:
    """Rational B with full-precision regression constants."""
    _check_range(reynolds)
    return _b_rational(compute_r(reynolds))


def compute_b_horner(reynolds: float) -> float:
    """Rational B with 4-digit constants in Horner form (offset 11.881)."""
    _check_range(reynolds)
    return _b_horner(compute_r(reynolds))


def _u_onelog(re, eps, ops):
    B = _b_horner(re / R_SCALE)
    z = B + re * eps / A_DIVISOR
    return U_SCALE * (B + _bracket_eq3(z, ops.log(z, "ln(B+A)")))


def friction_onelog(cond: FlowConditions) -> FrictionResult:
    """The eq3 structure with rational B: a single logarithm per call."""
    _check_range(cond.reynolds)
    u = _u_onelog(cond.reynolds, cond.relative_roughness, _MATH)
    return FrictionResult.from_inverse_sqrt(u, MethodId.EQ3_ONELOG)
