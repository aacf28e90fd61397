import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate as sp_integrate

from ineqlab import (DomainError, NonConvergence, NonFinite, QuadratureConfig, integrate,
                     integrate_halfline, integrate_unit)
from ineqlab.quadrature import GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES


def test_rule_tables():
    assert NODES.size == 21
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    # Gauss part integrates x^18 exactly, Kronrod x^30.
    assert GAUSS_WEIGHTS @ NODES**18 == pytest.approx(2 / 19, rel=1e-13)
    assert KRONROD_WEIGHTS @ NODES**30 == pytest.approx(2 / 31, rel=1e-13)


def test_unit_examples():
    assert integrate_unit(lambda p: np.ones_like(p)).value == pytest.approx(1.0, abs=1e-12)
    assert integrate_unit(lambda p: p**-0.5).value == pytest.approx(2.0, abs=1e-8)
    assert integrate_unit(lambda p: 6 * p * (1 - p)).value == pytest.approx(1.0, abs=1e-10)


def test_halfline_examples():
    assert integrate_halfline(lambda x: np.exp(-x)).value == pytest.approx(1.0, abs=1e-10)
    assert integrate_halfline(lambda x: np.exp(-x / 2)).value == pytest.approx(2.0, abs=1e-10)
    assert integrate_halfline(lambda x: np.zeros_like(x)).value == 0.0


def test_endpoints_never_evaluated():
    seen = []

    def f(t):
        seen.append(t.copy())
        return np.log(t) + np.log1p(-t)

    res = integrate_unit(f)
    t = np.concatenate(seen)
    assert t.min() > 0 and t.max() < 1
    assert res.value == pytest.approx(-2.0, abs=1e-9)


def test_complement_mode_resolves_right_singularity():
    res = integrate_unit(lambda t, tc: tc**-0.5, complement=True)
    assert res.value == pytest.approx(2.0, rel=2e-10)
    res = integrate_unit(lambda t, tc: -np.log(tc), complement=True)
    assert res.value == pytest.approx(1.0, abs=1e-10)


def test_subrange_and_reversed_limits():
    assert integrate(np.sin, 0, math.pi).value == pytest.approx(2.0, abs=1e-12)
    assert integrate(np.sin, math.pi, 0).value == pytest.approx(-2.0, abs=1e-12)
    res = integrate_unit(lambda t, tc: tc, complement=True, lower=0.2, upper=0.9)
    assert res.value == pytest.approx(0.5 * (0.8**2 - 0.1**2), abs=1e-13)


def test_break_points_help_kinks():
    f = lambda x: np.abs(x - 0.3)
    exact = 0.5 * (0.3**2 + 0.7**2)
    with_pts = integrate(f, 0, 1, points=[0.3])
    assert with_pts.value == pytest.approx(exact, abs=1e-14)
    assert integrate(f, 0, 1).value == pytest.approx(exact, abs=1e-10)


@pytest.mark.parametrize("f, a, b", [
    (lambda x: np.exp(-x * x), -3.0, 2.0),
    (lambda x: np.sqrt(x) * np.log(x), 0.0, 1.0),
    (lambda x: 1.0 / (1.0 + 25 * x * x), -1.0, 1.0),
])
def test_against_scipy_quad(f, a, b):
    ref, _ = sp_integrate.quad(lambda x: float(f(np.array(x))), a, b, epsabs=1e-13, epsrel=1e-13)
    assert integrate(f, a, b).value == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_result_invariants():
    cfg = QuadratureConfig(max_subdivisions=500)
    res = integrate_unit(lambda p: p**-0.5, cfg)
    assert math.isfinite(res.abs_error_estimate) and res.abs_error_estimate >= 0
    assert 1 <= res.subdivisions <= cfg.max_subdivisions


def test_nonconvergence_on_divergent_integrand():
    with pytest.raises(NonConvergence) as info:
        integrate_unit(lambda p: 1.0 / p, QuadratureConfig(max_subdivisions=40))
    assert info.value.partial is not None


def test_nonfinite_integrand():
    with pytest.raises(NonFinite):
        integrate_unit(lambda p: np.where(p > 0.5, np.nan, 1.0))


@pytest.mark.parametrize("kwargs", [dict(rel_tol=0), dict(abs_tol=-1), dict(max_subdivisions=0)])
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        QuadratureConfig(**kwargs)


def test_infinite_limits_rejected():
    with pytest.raises(DomainError):
        integrate(np.exp, 0, math.inf)


coeffs = st.lists(st.floats(-10, 10), min_size=1, max_size=8)


@settings(max_examples=200)
@given(coeffs, coeffs, st.floats(-5, 5), st.floats(-5, 5))
def test_linearity_small(cf, cg, a, b):
    """a I(f) + b I(g) = I(a f + b g) and both match the exact polynomial integral."""
    f, g = np.polynomial.Polynomial(cf), np.polynomial.Polynomial(cg)
    lhs = a * integrate_unit(f).value + b * integrate_unit(g).value
    h = a * f + b * g
    rhs = integrate_unit(h).value
    exact = h.integ()(1.0) - h.integ()(0.0)
    scale = max(1.0, float(np.abs(h.coef).sum()))
    assert abs(lhs - rhs) <= 10 * 1e-10 * scale
    assert abs(rhs - exact) <= 1e-10 * scale
