"""One entry point for every method in the catalog, scalar or vectorised."""

from __future__ import annotations

from functools import partial

import numpy as np

from . import literature, omega_approx, oracle, rational_b
from ._ops import ArrayOps, MathOps
from .core import FlowConditions, FrictionResult, MethodId, NumericError
from .literature import Convention

DESCRIPTIONS = {
    MethodId.ORACLE_FIXED_POINT: "implicit equation solved by fixed-point iteration (reference)",
    MethodId.ORACLE_LAMBERT: "exact closed form via the Wright omega function (reference)",
    MethodId.EQ3: "two logs; omega(x) - x ~ ln(x)(1/x - 1)",
    MethodId.EQ4: "two non-integer powers; ln(q) ~ a q^(1/a) - a, a = 1e6",
    MethodId.EQ5: "two logs; symbolic-regression refinement of eq3",
    MethodId.EQ6: "two logs; second refinement, most accurate of the family",
    MethodId.EQ3_ONELOG: "one log; eq3 with B from a Pade/rational fit",
    MethodId.BUZZELLI: "Buzzelli (2008)",
    MethodId.ZIGRANG_SYLVESTER: "Zigrang and Sylvester (1982)",
    MethodId.SERGHIDES: "Serghides (1984), three-term",
    MethodId.ROMEO: "Romeo, Royo and Monzon (2002)",
    MethodId.VATANKHAH_KOUCHAKZADEH: "Vatankhah and Kouchakzadeh (2008)",
    MethodId.BARR: "Barr (1981)",
    MethodId.SERGHIDES_SIMPLE: "Serghides (1984), simplified",
    MethodId.CHEN: "Chen (1979)",
    MethodId.FANG: "Fang, Xu and Zhou (2011)",
    MethodId.PAPAEVANGELOU: "Papaevangelou, Evangelides and Tzimopoulos (2010)",
    MethodId.VATANKHAH: "Vatankhah (2018)",
}

_OWN_KERNELS = {
    MethodId.EQ3: omega_approx._u_eq3,
    MethodId.EQ4: omega_approx._u_eq4,
    MethodId.EQ5: omega_approx._u_eq5,
    MethodId.EQ6: omega_approx._u_eq6,
    MethodId.EQ3_ONELOG: rational_b._u_onelog,
}


def kernel_for(method: MethodId, convention: Convention = Convention.AS_PRINTED):
    """Return ``kernel(re, eps, ops) -> u`` for an approximation."""
    if method in _OWN_KERNELS:
        return _OWN_KERNELS[method]
    if method in literature.KERNELS:
        k = literature.KERNELS[method]
        return lambda re, eps, ops: k(re, eps, ops, convention)
    raise ValueError(f"{method!r} has no formula kernel (oracle?)")


def compute_friction(method: MethodId, cond: FlowConditions,
                     convention: Convention = Convention.AS_PRINTED,
                     **options) -> FrictionResult:
    """Friction factor of ``cond`` by any catalog method.

    ``options`` are forwarded to :func:`omega_approx.friction_eq4` (``a``,
    ``variant``) and ignored otherwise.
    """
    if method is MethodId.ORACLE_FIXED_POINT:
        return oracle.friction_reference(cond)
    if method is MethodId.ORACLE_LAMBERT:
        return oracle.friction_exact_lambert(cond)
    if method is MethodId.EQ3:
        return omega_approx.friction_eq3(cond)
    if method is MethodId.EQ4:
        return omega_approx.friction_eq4(cond, **options)
    if method is MethodId.EQ5:
        return omega_approx.friction_eq5(cond)
    if method is MethodId.EQ6:
        return omega_approx.friction_eq6(cond)
    if method is MethodId.EQ3_ONELOG:
        return rational_b.friction_onelog(cond)
    return literature.friction_by_id(method, cond, convention)


def evaluate_array(method: MethodId, re, eps,
                   convention: Convention = Convention.AS_PRINTED,
                   **options):
    """Vectorised ``1/sqrt(f)`` over broadcast arrays ``re`` and ``eps``.

    Returns ``(u, fault_stage)``. ``fault_stage`` is an object array holding
    the name of the first stage that failed at each point, or ``""``.
    Faulted points have ``u = nan``.
    """
    re = np.asarray(re, dtype=float)
    eps = np.asarray(eps, dtype=float)
    shape = np.broadcast(re, eps).shape
    ops = ArrayOps(shape)
    with np.errstate(all="ignore"):
        if method is MethodId.ORACLE_FIXED_POINT:
            u = oracle._u_reference_kernel(re, eps)
        elif method is MethodId.ORACLE_LAMBERT:
            u = oracle._u_lambert_kernel(np.broadcast_to(re, shape),
                                         np.broadcast_to(eps, shape))
        elif method is MethodId.EQ4 and options:
            u = partial(omega_approx._u_eq4, **options)(re, eps, ops)
        else:
            u = kernel_for(method, convention)(re, eps, ops)
    u = np.broadcast_to(np.asarray(u, dtype=float), shape).copy()
    bad = ~(np.isfinite(u) & (u > 0.0))
    stage = ops.fault_stage
    stage[bad & (stage == "")] = "result"
    u[stage != ""] = np.nan
    return u, stage


def scalar_inverse_sqrt(method: MethodId, re: float, eps: float,
                        convention: Convention = Convention.AS_PRINTED) -> float:
    """Fast scalar path used by the benchmark; no result object."""
    if method.is_oracle:
        return compute_friction(method, FlowConditions(re, eps)).inverse_sqrt
    u = kernel_for(method, convention)(re, eps, _MATH)
    if not u > 0.0:
        raise NumericError(f"{method.cli_name}: non-physical result", stage="result")
    return u


_MATH = MathOps()
