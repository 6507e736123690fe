import mpmath
import pytest

from frictionlab import (
    LITERATURE_METHODS,
    Convention,
    FlowConditions,
    InputError,
    MethodId,
    NumericError,
    formula_metadata,
    friction_by_id,
    friction_exact_lambert,
)
from frictionlab.literature import CONVENTION_SENSITIVE

mpmath.mp.dps = 30
lg = mpmath.log10
ln = mpmath.log
mpf = mpmath.mpf


def chen(R, e):
    return -2 * lg(e / mpf("3.7065") - mpf("5.0452") / R
                   * lg(e ** mpf("1.1098") / mpf("2.8257") + mpf("5.8506") / R ** mpf("0.8981")))


def barr(R, e):
    return -2 * lg(e / mpf("3.7") + mpf("4.518") * lg(R / 7)
                   / (R * (1 + R ** mpf("0.52") * e ** mpf("0.7") / 29)))


def serghides(R, e):
    a = -2 * lg(e / mpf("3.7") + 12 / R)
    b = -2 * lg(e / mpf("3.7") + mpf("2.51") * a / R)
    c = -2 * lg(e / mpf("3.7") + mpf("2.51") * b / R)
    return a - (b - a) ** 2 / (c - 2 * b + a)


def serghides_simple(R, e):
    a = -2 * lg(e / mpf("3.7") + 12 / R)
    b = -2 * lg(e / mpf("3.7") + mpf("2.51") * a / R)
    return mpf("4.781") - (a - mpf("4.781")) ** 2 / (b - 2 * a + mpf("4.781"))


def zigrang(R, e):
    x = e / mpf("3.7")
    return -2 * lg(x - mpf("5.02") / R * lg(x - mpf("5.02") / R * lg(x + 13 / R)))


def romeo(R, e):
    inner = lg((e / mpf("7.7918")) ** mpf("0.9924") + (mpf("5.3326") / (mpf("208.815") + R)) ** mpf("0.9345"))
    mid = lg(e / mpf("3.827") - mpf("4.567") / R * inner)
    return -2 * lg(e / mpf("3.7065") - mpf("5.0272") / R * mid)


def buzzelli(R, e):
    b1 = (mpf("0.774") * ln(R) - mpf("1.41")) / (1 + mpf("1.32") * mpmath.sqrt(e))
    b2 = e / mpf("3.7") * R + mpf("2.51") * b1
    return b1 - (b1 + 2 * lg(b2 / R)) / (1 + mpf("2.18") / b2)


def papaevangelou(R, e):
    f = (mpf("0.2479") - mpf("0.0000947") * (7 - lg(R)) ** 4) / lg(e / mpf("3.615") + mpf("7.366") / R ** mpf("0.9142")) ** 2
    return 1 / mpmath.sqrt(f)


def fang(R, e):
    f = mpf("1.613") * ln(mpf("0.234") * e ** mpf("1.1007") - mpf("60.525") / R ** mpf("1.1105")
                          + mpf("56.291") / R ** mpf("1.0712")) ** -2
    return 1 / mpmath.sqrt(f)


def vatankhah_kouchakzadeh(R, e):
    s = mpf("0.124") * R * e + ln(mpf("0.4587") * R)
    return mpf("0.8686") * ln(mpf("0.4587") * R / (s - mpf("0.31")) ** (s / (s + mpf("0.9633"))))


def vatankhah(R, e):
    s = mpf("0.12363") * R * e + ln(mpf("0.3984") * R)
    d = 1 + 1 / ((1 + s) / (ln(mpf("0.8686") * s) / 2) - (1 + 4 * s) / (3 * (1 + s)))
    return mpf("0.8686") * ln(mpf("0.3984") * R / (mpf("0.8686") * s) ** (s / (s + d)))


INDEPENDENT = {
    MethodId.CHEN: chen, MethodId.BARR: barr, MethodId.SERGHIDES: serghides,
    MethodId.SERGHIDES_SIMPLE: serghides_simple, MethodId.ZIGRANG_SYLVESTER: zigrang,
    MethodId.ROMEO: romeo, MethodId.BUZZELLI: buzzelli,
    MethodId.PAPAEVANGELOU: papaevangelou, MethodId.FANG: fang,
    MethodId.VATANKHAH_KOUCHAKZADEH: vatankhah_kouchakzadeh, MethodId.VATANKHAH: vatankhah,
}
POINTS = [(5000.0, 1e-5), (1e5, 1e-4), (3e6, 2e-3), (8e7, 0.04)]


def test_every_literature_formula_has_independent_check():
    assert set(INDEPENDENT) == set(LITERATURE_METHODS)


@pytest.mark.parametrize("method", LITERATURE_METHODS, ids=lambda m: m.cli_name)
@pytest.mark.parametrize("re, eps", POINTS)
def test_classical_transcription(method, re, eps):
    u = friction_by_id(method, FlowConditions(re, eps), Convention.CLASSICAL).inverse_sqrt
    assert u == pytest.approx(float(INDEPENDENT[method](mpf(re), mpf(eps))), rel=1e-12)


@pytest.mark.parametrize("method", LITERATURE_METHODS, ids=lambda m: m.cli_name)
@pytest.mark.parametrize("re, eps", POINTS)
def test_classical_within_quoted_accuracy(method, re, eps):
    c = FlowConditions(re, eps)
    f = friction_by_id(method, c, Convention.CLASSICAL).friction_factor
    f_ref = friction_exact_lambert(c).friction_factor
    # pointwise check only; the grid-wide maximum is checked in acceptance
    assert abs(f - f_ref) / f_ref * 100 < 0.6 * 1.2 + formula_metadata(method).quoted_max_error


@pytest.mark.parametrize("method", sorted(set(LITERATURE_METHODS) - CONVENTION_SENSITIVE,
                                          key=lambda m: m.value), ids=lambda m: m.cli_name)
def test_insensitive_formulas_ignore_convention(method):
    c = FlowConditions(2e5, 1e-3)
    a = friction_by_id(method, c, Convention.AS_PRINTED).inverse_sqrt
    b = friction_by_id(method, c, Convention.CLASSICAL).inverse_sqrt
    assert a == b


@pytest.mark.parametrize("method", sorted(CONVENTION_SENSITIVE, key=lambda m: m.value),
                         ids=lambda m: m.cli_name)
def test_sensitive_formulas_differ(method):
    c = FlowConditions(2e5, 1e-2)
    try:
        a = friction_by_id(method, c, Convention.AS_PRINTED).inverse_sqrt
    except NumericError:
        return
    assert a != friction_by_id(method, c, Convention.CLASSICAL).inverse_sqrt


def test_printed_sign_fails_with_named_stage():
    with pytest.raises(NumericError) as exc:
        friction_by_id(MethodId.SERGHIDES, FlowConditions(1e5, 0.0), Convention.AS_PRINTED)
    assert exc.value.stage == "alpha5"


def test_not_a_literature_formula():
    with pytest.raises(InputError):
        friction_by_id(MethodId.EQ6, FlowConditions(1e5))
    with pytest.raises(InputError):
        formula_metadata(MethodId.ORACLE_LAMBERT)


@pytest.mark.parametrize("method, logs, powers, total, clamond", [
    (MethodId.VATANKHAH, 1, 2, 3, 5),
    (MethodId.EQ6, 2, 0, 2, 2),
    (MethodId.EQ4, 0, 2, 2, 4),
    (MethodId.ROMEO, 3, 2, 5, 7),
    (MethodId.BARR, 2, 2, 4, 6),
    (MethodId.EQ3_ONELOG, 1, 0, 1, 1),
    (MethodId.FANG, 1, 3, 4, 7),
    (MethodId.PAPAEVANGELOU, 2, 1, 3, 4),
])
def test_published_counts(method, logs, powers, total, clamond):
    m = formula_metadata(method)
    assert (m.log_count, m.noninteger_power_count) == (logs, powers)
    assert (m.total_expensive, m.total_expensive_clamond) == (total, clamond)
