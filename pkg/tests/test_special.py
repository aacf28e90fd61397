import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sps

from ineqlab.special import beta_partial, betainc, betainc_upper, log_beta


@pytest.mark.parametrize("a, b", [(0.5, 0.5), (2.5, 1.0), (3.5, 2.0), (1.0, 0.2), (20.0, 3.0)])
def test_betainc_against_scipy(a, b):
    x = np.linspace(0, 1, 201)
    assert np.allclose(betainc(a, b, x), sps.betainc(a, b, x), rtol=1e-13, atol=1e-15)
    assert np.allclose(betainc_upper(a, b, x), sps.betainc(b, a, 1 - x), rtol=1e-12, atol=1e-15)


def test_beta_partial_is_unnormalized():
    x = np.array([0.1, 0.5, 0.9, 1.0])
    ref = sps.betainc(2.5, 2.0, x) * sps.beta(2.5, 2.0)
    assert np.allclose(beta_partial(2.5, 2.0, x), ref, rtol=1e-13)


def test_log_beta():
    assert log_beta(2.0, 3.0) == pytest.approx(np.log(1 / 12), rel=1e-14)


@settings(max_examples=300)
@given(st.floats(0.05, 30), st.floats(0.05, 30), st.floats(0, 1))
def test_betainc_property(a, b, x):
    """Own continued fraction agrees with scipy over a broad parameter range."""
    assert betainc(a, b, x) == pytest.approx(sps.betainc(a, b, x), rel=1e-11, abs=1e-14)
