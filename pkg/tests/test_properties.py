import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from invariants import SUITES, distributions, gambles
from ineqlab import (BetaGamble, PointGamble, PointMass, SocietalFunction, TruncatedGamble,
                     relative_risk, transform_affine)

P = np.linspace(0.02, 0.98, 49)


def _suite_test(name, n=200):
    check, strategy = SUITES[name]

    @settings(max_examples=n)
    @given(strategy)
    def test(case):
        check(case)

    test.__doc__ = f"{name} on randomized cases."
    return test


test_quadrature_linearity = _suite_test("quadrature linearity")
test_density_normalization = _suite_test("density normalization")
test_lorenz_bounds = _suite_test("Lorenz bounds")
test_decomposition_identity = _suite_test("decomposition identity")
test_homogeneity_of_v = _suite_test("homogeneity of v")


@settings(max_examples=200)
@given(distributions, st.floats(1e-4, 1 - 1e-4))
def test_galois(d, t):
    """quantile(t) <= x iff t <= cdf(x) at x = quantile(t) and just below it."""
    q = float(d.quantile(t))
    assert t <= float(d.cdf(q)) + 1e-12
    below = np.nextafter(q, -np.inf) if q > 0 else -1.0
    if not isinstance(d, PointMass) and float(d.cdf(below)) > t + 1e-9:
        raise AssertionError((t, q, float(d.cdf(below))))


@settings(max_examples=200)
@given(distributions, st.sampled_from([0.1, 3.0]))
def test_curves_scale_free(d, c):
    """Lorenz, Bonferroni and risk curves do not change under rescaling."""
    s, t = SocietalFunction(d), SocietalFunction(transform_affine(d, c))
    assert np.allclose(s.lorenz(P), t.lorenz(P), rtol=0, atol=1e-9)
    assert np.allclose(s.bonferroni_curve(P), t.bonferroni_curve(P), rtol=0, atol=1e-9)
    lo = s._lce(P)
    if np.all(lo > 0):
        assert np.allclose(s.risk(P), t.risk(P), rtol=1e-9, atol=1e-9)


@settings(max_examples=100)
@given(distributions.filter(lambda d: not isinstance(d, PointMass)), st.floats(0.05, 5))
def test_shift_decreases_risk(d, shift):
    """Adding a constant never raises the relative risk measure."""
    for g in (PointGamble(0.5), TruncatedGamble(BetaGamble(1, 1), 0.01, 0.99)):
        if float(SocietalFunction(d)._lce(0.01)) <= 0:
            return
        assert relative_risk(transform_affine(d, 1.0, shift), g) <= relative_risk(d, g) + 1e-10


@given(gambles)
@settings(max_examples=100)
def test_gamble_density_nonnegative(g):
    t = np.linspace(0.001, 0.999, 999)
    assert np.all(g.density(t) >= 0)
