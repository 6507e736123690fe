"""Explicit approximations of the Colebrook friction equation.

Quick use::

    >>> from frictionlab import FlowConditions, MethodId, compute_friction
    >>> r = compute_friction(MethodId.EQ6, FlowConditions(1e5, 1e-4))
    >>> round(r.friction_factor, 5)
    0.01851
"""

from .core import (
    APPROXIMATIONS,
    LITERATURE_METHODS,
    OWN_METHODS,
    DomainStatus,
    FlowConditions,
    FrictionResult,
    InputError,
    MethodId,
    NumericError,
    colebrook_residual,
    relative_error_percent,
    validate_domain,
)
from .literature import Convention, formula_metadata, friction_by_id
from .methods import compute_friction, evaluate_array
from .omega_approx import compute_ab, friction_eq3, friction_eq4, friction_eq5, friction_eq6
from .oracle import (
    OVERFLOW,
    compute_x,
    friction_exact_lambert,
    friction_reference,
    naive_w_exp,
    series_y,
    wright_omega,
)
from .rational_b import compute_b_horner, compute_b_rational, compute_r, friction_onelog, pade_s

__version__ = "0.1.0"
