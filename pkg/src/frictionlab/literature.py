"""Eleven published explicit approximations of the Colebrook equation.

Each formula exists in two transcriptions, selected by :class:`Convention`:

``AS_PRINTED``
    Literal transcription of the reference listing, including its sign and
    constant choices.
``CLASSICAL``
    The form found in the original sources. It differs only for
    Zigrang-Sylvester, Serghides, Serghides-simple (``+`` instead of ``-``
    inside the logarithm), Vatankhah-Kouchakzadeh (``0.4587 R`` instead of
    ``0.1587 R``), Vatankhah (exponent ``S/(S + d)`` instead of ``S + d``)
    and Fang (``- 60.525/R^1.1105 + 56.291/R^1.0712``).

For the other five formulas the two conventions are identical.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ._ops import MathOps
from .core import (
    APPROXIMATIONS,
    LITERATURE_METHODS,
    FlowConditions,
    FrictionResult,
    InputError,
    MethodId,
)


class Convention(enum.Enum):
    AS_PRINTED = "printed"
    CLASSICAL = "classical"


_MATH = MathOps()


def _buzzelli(re, eps, ops, conv):
    a1 = (0.774 * ops.log(re, "ln(R)") - 1.41) / (
        1.0 + 1.32 * ops.sqrt(eps, "sqrt(eps)"))
    a2 = eps / 3.7 * re + 2.51 * a1
    return a1 - (a1 + 2.0 * ops.log10(a2 / re, "alpha2/R")) / (1.0 + 2.18 / a2)


def _zigrang_sylvester(re, eps, ops, conv):
    e = eps / 3.7
    inner = e - 13.0 / re if conv is Convention.AS_PRINTED else e + 13.0 / re
    a4 = ops.log10(inner, "alpha4")
    a3 = ops.log10(e - 5.02 / re * a4, "alpha3")
    return -2.0 * ops.log10(e - 5.02 / re * a3, "outer")


def _serghides_terms(re, eps, ops, conv, n):
    sign = -1.0 if conv is Convention.AS_PRINTED else 1.0
    e = eps / 3.7
    terms = [-2.0 * ops.log10(e + sign * 12.0 / re, "alpha5")]
    for k in range(1, n):
        prev = terms[-1]
        terms.append(-2.0 * ops.log10(e + sign * 2.51 / re * prev,
                                      f"alpha{5 + k}"))
    return terms


def _serghides(re, eps, ops, conv):
    a5, a6, a7 = _serghides_terms(re, eps, ops, conv, 3)
    d = a6 - a5
    return a5 - d * d / (a7 - 2.0 * a6 + a5)


def _serghides_simple(re, eps, ops, conv):
    a13, a14 = _serghides_terms(re, eps, ops, conv, 2)
    d = a13 - 4.781
    return 4.781 - d * d / (a14 - 2.0 * a13 + 4.781)


def _romeo(re, eps, ops, conv):
    a9 = ops.log10(
        ops.pow(eps / 7.7918, 0.9924, "(eps/7.7918)^0.9924")
        + ops.pow(5.3326 / (208.815 + re), 0.9345, "(5.3326/(208.815+R))^0.9345"),
        "alpha9")
    a8 = ops.log10(eps / 3.827 - 4.567 / re * a9, "alpha8")
    return -2.0 * ops.log10(eps / 3.7065 - 5.0272 / re * a8, "outer")


def _vatankhah_kouchakzadeh(re, eps, ops, conv):
    c = 0.1587 if conv is Convention.AS_PRINTED else 0.4587
    a10 = 0.124 * re * eps + ops.log(c * re, "alpha10")
    a11 = a10 / (a10 + 0.9633)
    return 0.8686 * ops.log(
        0.4587 * re / ops.pow(a10 - 0.31, a11, "(alpha10-0.31)^alpha11"),
        "outer")


def _barr(re, eps, ops, conv):
    a12 = re * (1.0 + ops.pow(re, 0.52, "R^0.52") / 29.0
                * ops.pow(eps, 0.7, "eps^0.7"))
    return -2.0 * ops.log10(
        eps / 3.7 + 4.518 * ops.log10(re / 7.0, "log10(R/7)") / a12, "outer")


def _chen(re, eps, ops, conv):
    a15 = ops.log10(ops.pow(eps, 1.1098, "eps^1.1098") / 2.8257
                    + 5.8506 / ops.pow(re, 0.8981, "R^0.8981"), "alpha15")
    return -2.0 * ops.log10(eps / 3.7065 - 5.0452 / re * a15, "outer")


def _fang(re, eps, ops, conv):
    t1 = 60.525 / ops.pow(re, 1.1105, "R^1.1105")
    t2 = 56.291 / ops.pow(re, 1.0712, "R^1.0712")
    rough = 0.234 * ops.pow(eps, 1.1007, "eps^1.1007")
    if conv is Convention.AS_PRINTED:
        arg = rough - (t1 + t2)
    else:
        arg = rough - t1 + t2
    l = ops.log(arg, "ln")
    f = 1.613 / (l * l)
    return 1.0 / ops.sqrt(f, "sqrt(f)")


def _papaevangelou(re, eps, ops, conv):
    t = 7.0 - ops.log10(re, "log10(R)")
    t2 = t * t
    den = ops.log10(eps / 3.615 + 7.366 / ops.pow(re, 0.9142, "R^0.9142"),
                    "denominator")
    f = (0.2479 - 0.0000947 * t2 * t2) / (den * den)
    return 1.0 / ops.sqrt(f, "sqrt(f)")


def _vatankhah(re, eps, ops, conv):
    a17 = 0.12363 * re * eps + ops.log(0.3984 * re, "alpha17")
    base = 0.8686 * a17
    a18 = 1.0 + 1.0 / ((1.0 + a17) / (0.5 * ops.log(base, "alpha18"))
                       - (1.0 + 4.0 * a17) / (3.0 * (1.0 + a17)))
    if conv is Convention.AS_PRINTED:
        expo = a17 + a18
    else:
        expo = a17 / (a17 + a18)
    return 0.8686 * ops.log(0.3984 * re / ops.pow(base, expo, "power"), "outer")


KERNELS = {
    MethodId.BUZZELLI: _buzzelli,
    MethodId.ZIGRANG_SYLVESTER: _zigrang_sylvester,
    MethodId.SERGHIDES: _serghides,
    MethodId.ROMEO: _romeo,
    MethodId.VATANKHAH_KOUCHAKZADEH: _vatankhah_kouchakzadeh,
    MethodId.BARR: _barr,
    MethodId.SERGHIDES_SIMPLE: _serghides_simple,
    MethodId.CHEN: _chen,
    MethodId.FANG: _fang,
    MethodId.PAPAEVANGELOU: _papaevangelou,
    MethodId.VATANKHAH: _vatankhah,
}

# Formulas whose two transcriptions differ.
CONVENTION_SENSITIVE = frozenset({
    MethodId.ZIGRANG_SYLVESTER,
    MethodId.SERGHIDES,
    MethodId.SERGHIDES_SIMPLE,
    MethodId.VATANKHAH_KOUCHAKZADEH,
    MethodId.FANG,
    MethodId.VATANKHAH,
})


def friction_by_id(method: MethodId, cond: FlowConditions,
                   convention: Convention = Convention.AS_PRINTED) -> FrictionResult:
    """Evaluate one literature formula.

    Raises
    ------
    InputError
        If ``method`` is not a literature formula.
    NumericError
        If an intermediate logarithm or power gets an invalid argument; the
        exception's ``stage`` names it.
    """
    try:
        kernel = KERNELS[method]
    except KeyError:
        raise InputError(f"{method!r} is not a literature formula") from None
    u = kernel(cond.reynolds, cond.relative_roughness, _MATH, convention)
    return FrictionResult.from_inverse_sqrt(u, method)


@dataclass(frozen=True)
class LiteratureFormula:
    """Published accuracy and expensive-function counts of one method.

    ``quoted_max_error`` is in percent. ``sqrt_count`` records square roots,
    which are not counted as expensive.
    """

    id: MethodId
    label: str
    log_count: int
    noninteger_power_count: int
    quoted_max_error: float
    sqrt_count: int = 0

    @property
    def total_expensive(self) -> int:
        return self.log_count + self.noninteger_power_count

    @property
    def total_expensive_clamond(self) -> int:
        """Each non-integer power counted as a log plus an exp."""
        return self.log_count + 2 * self.noninteger_power_count


_M = MethodId
_METADATA = {
    m.id: m for m in (
        LiteratureFormula(_M.VATANKHAH, "Vatankhah", 1, 2, 0.0028),
        LiteratureFormula(_M.EQ6, "Wright-omega two-log, refined (eq6)", 2, 0, 0.0096),
        LiteratureFormula(_M.EQ5, "Wright-omega two-log, refined (eq5)", 2, 0, 0.045),
        LiteratureFormula(_M.EQ3, "Wright-omega two-log (eq3)", 2, 0, 0.13),
        LiteratureFormula(_M.EQ4, "Wright-omega power form (eq4)", 0, 2, 0.13),
        LiteratureFormula(_M.BUZZELLI, "Buzzelli", 2, 0, 0.14, sqrt_count=1),
        LiteratureFormula(_M.ZIGRANG_SYLVESTER, "Zigrang and Sylvester", 3, 0, 0.14),
        LiteratureFormula(_M.SERGHIDES, "Serghides", 3, 0, 0.14),
        LiteratureFormula(_M.ROMEO, "Romeo et al.", 3, 2, 0.14),
        LiteratureFormula(_M.VATANKHAH_KOUCHAKZADEH, "Vatankhah and Kouchakzadeh",
                          2, 1, 0.15),
        LiteratureFormula(_M.BARR, "Barr", 2, 2, 0.27),
        LiteratureFormula(_M.SERGHIDES_SIMPLE, "Serghides-simple", 2, 0, 0.35),
        LiteratureFormula(_M.CHEN, "Chen", 2, 2, 0.36),
        LiteratureFormula(_M.EQ3_ONELOG, "Wright-omega one-log, rational B (eq11)",
                          1, 0, 0.4),
        LiteratureFormula(_M.FANG, "Fang et al.", 1, 3, 0.62),
        LiteratureFormula(_M.PAPAEVANGELOU, "Papaevangelou et al.", 2, 1, 0.82),
    )
}

assert set(_METADATA) == set(APPROXIMATIONS)
assert set(KERNELS) == set(LITERATURE_METHODS)


def formula_metadata(method: MethodId) -> LiteratureFormula:
    try:
        return _METADATA[method]
    except KeyError:
        raise InputError(f"no published metadata for {method!r}") from None
