import math

import pytest

from frictionlab import (
    FlowConditions,
    MethodId,
    compute_ab,
    friction_eq3,
    friction_eq4,
    friction_eq5,
    friction_eq6,
    friction_exact_lambert,
    series_y,
)

LN10 = math.log(10)
POINTS = [(4001.0, 0.0), (1e5, 1e-4), (2e6, 1e-3), (9e7, 0.0), (9e7, 0.04), (3e4, 0.02)]


def test_ab_definitions():
    ab = compute_ab(FlowConditions(2e5, 3e-3))
    assert ab.A == pytest.approx(2e5 * 3e-3 / 8.0878, rel=1e-15)
    assert ab.B == pytest.approx(math.log(2e5 / (2 * 2.51 / LN10)), abs=1e-8)


@pytest.mark.parametrize("re, eps", POINTS)
def test_eq3_is_three_term_series(re, eps):
    # omega(x) - x replaced with the series minus its argument, x ~ B + A
    B = math.log(re) - math.log(2 * 2.51 / LN10)
    z = B + re * eps / 8.0878
    expected = 0.8686 * (B + series_y(z) - z)
    assert friction_eq3(FlowConditions(re, eps)).inverse_sqrt == pytest.approx(expected, rel=1e-8)


@pytest.mark.parametrize("re, eps", POINTS)
@pytest.mark.parametrize("variant, base", [("A.2.1", friction_eq3), ("A.2.2", friction_eq5),
                                           ("A.2.3", friction_eq6)])
def test_eq4_variants_track_their_log_forms(re, eps, variant, base):
    c = FlowConditions(re, eps)
    u4 = friction_eq4(c, a=1e6, variant=variant).inverse_sqrt
    assert u4 == pytest.approx(base(c).inverse_sqrt, rel=2e-4)


def test_eq4_converges_with_a():
    c = FlowConditions(1e6, 1e-4)
    u3 = friction_eq3(c).inverse_sqrt
    d_small = abs(friction_eq4(c, a=2e5).inverse_sqrt - u3)
    d_big = abs(friction_eq4(c, a=5e6).inverse_sqrt - u3)
    assert d_big < d_small


@pytest.mark.parametrize("kwargs", [{"a": 1e5}, {"a": 10.0}, {"variant": "A.9"}])
def test_eq4_rejects_bad_options(kwargs):
    with pytest.raises(ValueError):
        friction_eq4(FlowConditions(1e5, 1e-4), **kwargs)


@pytest.mark.parametrize("re, eps", POINTS)
def test_accuracy_ladder_pointwise(re, eps):
    c = FlowConditions(re, eps)
    f_ref = friction_exact_lambert(c).friction_factor
    err = {fn.__name__: abs(fn(c).friction_factor - f_ref) / f_ref * 100
           for fn in (friction_eq3, friction_eq5, friction_eq6)}
    assert err["friction_eq6"] < 0.0096
    assert err["friction_eq5"] < 0.06
    assert err["friction_eq3"] < 0.16


def test_method_tags():
    c = FlowConditions(1e5, 1e-4)
    assert friction_eq3(c).method is MethodId.EQ3
    assert friction_eq4(c).method is MethodId.EQ4
    assert friction_eq5(c).method is MethodId.EQ5
    assert friction_eq6(c).method is MethodId.EQ6
