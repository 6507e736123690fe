"""Domain types, input validation, the relative-error metric and the
Colebrook residual shared by every other module."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

# Validated band of the Colebrook equation (strict bounds).
RE_MIN = 4000.0
RE_MAX = 1e8
EPS_MAX = 0.05


class InputError(ValueError):
    """Raised for invalid inputs (non-finite, non-positive Reynolds, ...)."""


class NumericError(ArithmeticError):
    """Raised when a formula cannot be evaluated or an iteration fails.

    ``stage`` names the intermediate quantity that went wrong, when known.
    """

    def __init__(self, message: str, stage: str | None = None):
        super().__init__(message)
        self.stage = stage


class MethodId(enum.Enum):
    """Closed catalog of friction-factor methods."""

    ORACLE_FIXED_POINT = "oracle"
    ORACLE_LAMBERT = "lambert-oracle"
    EQ3 = "eq3"
    EQ4 = "eq4"
    EQ5 = "eq5"
    EQ6 = "eq6"
    EQ3_ONELOG = "eq11"
    BUZZELLI = "buzzelli"
    ZIGRANG_SYLVESTER = "zigrang-sylvester"
    SERGHIDES = "serghides"
    ROMEO = "romeo"
    VATANKHAH_KOUCHAKZADEH = "vatankhah-kouchakzadeh"
    BARR = "barr"
    SERGHIDES_SIMPLE = "serghides-simple"
    CHEN = "chen"
    FANG = "fang"
    PAPAEVANGELOU = "papaevangelou"
    VATANKHAH = "vatankhah"

    @property
    def cli_name(self) -> str:
        return self.value

    @property
    def is_oracle(self) -> bool:
        return self in (MethodId.ORACLE_FIXED_POINT, MethodId.ORACLE_LAMBERT)

    @classmethod
    def from_name(cls, name: str) -> "MethodId":
        key = name.strip().lower().replace("_", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise InputError(f"unknown method {name!r}")


OWN_METHODS = (
    MethodId.EQ3,
    MethodId.EQ4,
    MethodId.EQ5,
    MethodId.EQ6,
    MethodId.EQ3_ONELOG,
)

LITERATURE_METHODS = (
    MethodId.VATANKHAH,
    MethodId.BUZZELLI,
    MethodId.ZIGRANG_SYLVESTER,
    MethodId.SERGHIDES,
    MethodId.ROMEO,
    MethodId.VATANKHAH_KOUCHAKZADEH,
    MethodId.BARR,
    MethodId.SERGHIDES_SIMPLE,
    MethodId.CHEN,
    MethodId.FANG,
    MethodId.PAPAEVANGELOU,
)

# Everything that is scored against the oracle.
APPROXIMATIONS = OWN_METHODS + LITERATURE_METHODS


@dataclass(frozen=True)
class FlowConditions:
    """Reynolds number and relative roughness, both dimensionless."""

    reynolds: float
    relative_roughness: float = 0.0

    def __post_init__(self):
        re, eps = self.reynolds, self.relative_roughness
        try:
            re, eps = float(re), float(eps)
        except (TypeError, ValueError) as exc:
            raise InputError(f"non-numeric flow conditions: {exc}") from None
        if not math.isfinite(re) or re <= 0.0:
            raise InputError(f"reynolds must be finite and > 0, got {re!r}")
        if not math.isfinite(eps) or eps < 0.0:
            raise InputError(
                f"relative_roughness must be finite and >= 0, got {eps!r}"
            )
        object.__setattr__(self, "reynolds", re)
        object.__setattr__(self, "relative_roughness", eps)


@dataclass(frozen=True)
class DomainStatus:
    inside_colebrook_domain: bool
    violations: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class FrictionResult:
    """A friction factor together with ``inverse_sqrt = 1/sqrt(f)``.

    ``inverse_sqrt`` is the quantity every formula computes; ``friction_factor``
    is derived from it.
    """

    inverse_sqrt: float
    method: MethodId

    @property
    def friction_factor(self) -> float:
        return 1.0 / (self.inverse_sqrt * self.inverse_sqrt)

    @classmethod
    def from_inverse_sqrt(cls, u, method: MethodId) -> "FrictionResult":
        u = float(u)
        if not math.isfinite(u) or u <= 0.0:
            raise NumericError(f"{method.cli_name}: non-physical result 1/sqrt(f) = {u!r}")
        return cls(u, method)


def validate_domain(cond: FlowConditions) -> DomainStatus:
    """Check ``cond`` against 4000 < R < 1e8 and 0 <= eps < 0.05.

    Smooth pipes (eps = 0) are accepted. Out-of-band inputs are reported,
    not rejected.
    """
    violations = []
    if not cond.reynolds > RE_MIN:
        violations.append("reynolds <= 4000 (lower bound, strict)")
    if not cond.reynolds < RE_MAX:
        violations.append("reynolds >= 1e8 (upper bound, strict)")
    if not cond.relative_roughness < EPS_MAX:
        violations.append("relative_roughness >= 0.05 (upper bound, strict)")
    return DomainStatus(not violations, tuple(violations))


def colebrook_residual(f: float, cond: FlowConditions) -> float:
    """``1/sqrt(f) + 2 log10(2.51/(R sqrt(f)) + eps/3.71)``; zero at the root."""
    if not f > 0.0:
        raise InputError(f"friction factor must be > 0, got {f!r}")
    sqrt_f = math.sqrt(f)
    arg = 2.51 / (cond.reynolds * sqrt_f) + cond.relative_roughness / 3.71
    if not arg > 0.0:
        raise NumericError("non-positive logarithm argument", stage="colebrook")
    return 1.0 / sqrt_f + 2.0 * math.log10(arg)


def relative_error_percent(q_approx: float, q_ref: float) -> float:
    """``100 |q_approx - q_ref| / |q_ref|``."""
    if q_ref == 0:
        raise ZeroDivisionError("reference value is zero")
    return 100.0 * abs(q_approx - q_ref) / abs(q_ref)
