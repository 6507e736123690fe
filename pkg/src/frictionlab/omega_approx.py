"""Explicit two-log approximations built on the shifted omega series.

All of them share ``A = R eps / 8.0878`` and ``B = ln(R) - 0.779397488``;
they differ in how ``omega(x) - x`` is replaced by a function of ``B + A``.
The rounded constants (0.8686, 8.0878, 0.779397488) are kept as printed:
the published error figures were computed with them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._ops import MathOps
from .core import FlowConditions, FrictionResult, MethodId

U_SCALE = 0.8686  # 2 / ln(10), rounded
A_DIVISOR = 8.0878  # 2.18 * 3.71
B_SHIFT = 0.779397488  # ln(2 * 2.51 / ln(10))

DEFAULT_POWER = 1e6
MIN_POWER = 1e5
EQ4_VARIANTS = ("A.2.1", "A.2.2", "A.2.3")

_MATH = MathOps()


@dataclass(frozen=True)
class ABPair:
    A: float
    B: float


def compute_ab(cond: FlowConditions) -> ABPair:
    return ABPair(*_ab(cond.reynolds, cond.relative_roughness, _MATH))


def _ab(re, eps, ops):
    return re * eps / A_DIVISOR, ops.log(re, "B") - B_SHIFT


# Each bracket takes z = B + A and l = ln(z) (or its power-form stand-in)
# and returns omega(x) - x replaced by a function of z.

def _bracket_eq3(z, l):
    return l * (1.0 / z - 1.0)


def _bracket_eq5(z, l):
    return 1.038 * l / (0.332 + z) - l


def _bracket_eq6(z, l):
    return 1.0119 * l / z - l + (l - 2.3849) / (z * z)


def _u_eq3(re, eps, ops):
    A, B = _ab(re, eps, ops)
    z = B + A
    return U_SCALE * (B + _bracket_eq3(z, ops.log(z, "ln(B+A)")))


def _u_eq5(re, eps, ops):
    A, B = _ab(re, eps, ops)
    z = B + A
    return U_SCALE * (B + _bracket_eq5(z, ops.log(z, "ln(B+A)")))


def _u_eq6(re, eps, ops):
    A, B = _ab(re, eps, ops)
    z = B + A
    return U_SCALE * (B + _bracket_eq6(z, ops.log(z, "ln(B+A)")))


_EQ4_BRACKETS = {
    "A.2.1": _bracket_eq3,
    "A.2.2": _bracket_eq5,
    "A.2.3": _bracket_eq6,
}


def _u_eq4(re, eps, ops, a=DEFAULT_POWER, variant="A.2.1"):
    """Power form: every ``ln(q)`` becomes ``a q**(1/a) - a``."""
    bracket = _EQ4_BRACKETS[variant]
    inv_a = 1.0 / a
    A = re * eps / A_DIVISOR
    B = a * ops.pow(re, inv_a, "R^(1/a)") - a - B_SHIFT
    z = B + A
    l = a * ops.pow(z, inv_a, "(B+A)^(1/a)") - a
    return U_SCALE * (B + bracket(z, l))


def _result(u, method):
    return FrictionResult.from_inverse_sqrt(u, method)


def friction_eq3(cond: FlowConditions) -> FrictionResult:
    """Baseline two-log approximation (series ``x - ln x + ln x / x``)."""
    return _result(_u_eq3(cond.reynolds, cond.relative_roughness, _MATH),
                   MethodId.EQ3)


def friction_eq4(cond: FlowConditions, a: float = DEFAULT_POWER,
                 variant: str = "A.2.1") -> FrictionResult:
    """Logarithm-free form using ``ln q ~ a (q**(1/a) - 1)``.

    ``variant`` selects the bracket: ``"A.2.1"`` (same structure as eq3,
    the default), ``"A.2.2"`` (eq5) or ``"A.2.3"`` (eq6).
    """
    if not a > MIN_POWER:
        raise ValueError(f"power parameter must exceed 1e5, got {a!r}")
    if variant not in _EQ4_BRACKETS:
        raise ValueError(f"unknown variant {variant!r}; use one of {EQ4_VARIANTS}")
    u = _u_eq4(cond.reynolds, cond.relative_roughness, _MATH, a, variant)
    return _result(u, MethodId.EQ4)


def friction_eq5(cond: FlowConditions) -> FrictionResult:
    return _result(_u_eq5(cond.reynolds, cond.relative_roughness, _MATH),
                   MethodId.EQ5)


def friction_eq6(cond: FlowConditions) -> FrictionResult:
    """Most accurate of the two-log forms (about 0.01 % on f)."""
    return _result(_u_eq6(cond.reynolds, cond.relative_roughness, _MATH),
                   MethodId.EQ6)
