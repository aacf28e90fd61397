import itertools
import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import optimize, special

from ineqlab import DomainError, Zenga, zenga_cdf, zenga_pdf, zenga_quantile

GRID = [Zenga(mu, a, th) for mu, a, th in itertools.product((1.0, 2.0), (1.5, 2.0, 3.0), (2.0, 3.0, 4.0))]


def oracle_pdf(z, x):
    """Two-branch density with the inner integral from scipy's incomplete beta."""
    y = x / z.mu
    arg = y if y < 1 else 1 / y
    inner = special.betainc(z.alpha + 0.5, z.theta - 1, arg) * special.beta(z.alpha + 0.5, z.theta - 1)
    return y**-1.5 * inner / (2 * z.mu * special.beta(z.alpha, z.theta))


def quad(f, a, b):
    return sp_integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-12, limit=500)[0]


@pytest.mark.parametrize("z", GRID, ids=repr)
def test_pdf_matches_oracle(z):
    for x in (0.01, 0.3, 0.99, 1.0, 1.7, 12.0, 400.0):
        x = x * z.mu
        assert float(z.pdf(x)) == pytest.approx(oracle_pdf(z, x), rel=1e-12)


@pytest.mark.parametrize("z", GRID, ids=repr)
def test_normalization_and_mean(z):
    mass = quad(lambda x: float(z.pdf(x)), 0, z.mu) + quad(lambda x: float(z.pdf(x)), z.mu, np.inf)
    first = (quad(lambda x: x * float(z.pdf(x)), 0, z.mu)
             + quad(lambda x: x * float(z.pdf(x)), z.mu, np.inf))
    assert mass == pytest.approx(1.0, abs=1e-6)
    assert first == pytest.approx(z.mu, abs=1e-6)


@pytest.mark.parametrize("z", GRID[:6], ids=repr)
def test_cdf_matches_integrated_pdf(z):
    for x in (0.2, 0.9, 1.0, 1.5, 6.0):
        x = x * z.mu
        ref = quad(lambda s: float(z.pdf(s)), 0, x)
        assert float(z.cdf(x)) == pytest.approx(ref, abs=1e-10)
        assert float(z.sf(x)) == pytest.approx(1 - ref, abs=1e-10)


def test_continuity_at_mu():
    z = Zenga(2, 2, 3)
    left, right = z.pdf(2 * (1 - 1e-12)), z.pdf(2.0)
    assert float(left) == pytest.approx(float(right), rel=1e-8)
    assert float(z.cdf(2 * (1 - 1e-12))) == pytest.approx(float(z.cdf(2.0)), abs=1e-10)


def test_cdf_examples():
    z = Zenga(2, 2, 3)
    assert float(zenga_cdf(z, 0.0)) == 0.0
    assert float(zenga_cdf(z, 1e9)) == pytest.approx(1.0, abs=1e-6)
    xs = np.arange(0.1, 20.05, 0.1)
    assert np.all(np.diff(zenga_cdf(z, xs)) >= 0)


def test_pdf_domain():
    with pytest.raises(DomainError):
        zenga_pdf(Zenga(2, 2, 3), 0.0)
    with pytest.raises(DomainError):
        zenga_pdf(Zenga(2, 2, 3), -1.0)


@pytest.mark.parametrize("z", GRID, ids=repr)
def test_quantile_round_trip(z):
    t = np.array([0.1, 0.5, 0.9])
    assert np.allclose(z.cdf(zenga_quantile(z, t)), t, atol=1e-7)
    tt = np.linspace(1e-6, 1 - 1e-6, 999)
    assert np.all(np.diff(z.quantile(tt)) > 0)


def test_quantile_extreme_tails():
    z = Zenga(2, 2, 3)
    tc = np.array([1e-3, 1e-8, 1e-13])
    x = z.quantile(1 - tc, tc)
    assert np.allclose(z.sf(x), tc, rtol=1e-9)
    t = np.array([1e-3, 1e-8, 1e-13])
    assert np.allclose(z.cdf(z.quantile(t)), t, rtol=1e-9)


def test_median_against_quadrature_root():
    z = Zenga(2, 2, 3)
    # median from a root of the scipy-integrated density, no library cdf involved
    cdf = lambda x: quad(lambda s: oracle_pdf(z, s), 0, min(x, 2.0)) + (
        quad(lambda s: oracle_pdf(z, s), 2.0, x) if x > 2 else 0.0)
    ref = optimize.brentq(lambda x: cdf(x) - 0.5, 0.1, 10, xtol=1e-13)
    med = float(z.quantile(0.5))
    assert med == pytest.approx(ref, abs=1e-8)
    assert med < 2 * z.mu


def test_median_against_monte_carlo():
    z = Zenga(2, 2, 3)
    u = np.random.default_rng(20100).random(10**6)
    assert float(np.median(z.quantile(u))) == pytest.approx(float(z.quantile(0.5)), abs=1e-2)


@pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
def test_tail_exponent(alpha):
    z = Zenga(1, alpha, 3)
    xs = np.array([1e2, 1e3, 1e4])
    scaled = xs ** (alpha + 2) * z.pdf(xs)
    assert np.ptp(scaled) / scaled.mean() < 5e-2
    # a slower x^1.5 scaling collapses to zero instead of stabilising
    slow = xs**1.5 * z.pdf(xs)
    assert slow[-1] / slow[0] < 1e-3
    assert z.tail_index == alpha + 1


@pytest.mark.parametrize("z", GRID[::4], ids=repr)
def test_partial_moments_against_quadrature(z):
    for p in (0.05, 0.5, 0.95):
        x = float(z.quantile(p))
        lo = quad(lambda s: s * oracle_pdf(z, s), 0, x)
        assert float(z.lower_integral(p)) == pytest.approx(lo, rel=1e-9, abs=1e-12)
        up = quad(lambda s: s * oracle_pdf(z, s), x, np.inf)
        assert float(z.upper_integral(p)) == pytest.approx(up, rel=1e-9)


@pytest.mark.parametrize("theta", [1.0, 0.5])
def test_theta_at_most_one_rejected(theta):
    with pytest.raises(DomainError):
        Zenga(1, 2, theta)


def test_rejects_nonpositive_parameters():
    for args in [(0, 2, 3), (1, 0, 3), (1, 2, 0)]:
        with pytest.raises(DomainError):
            Zenga(*args)


def test_small_theta_minus_one():
    z = Zenga(1.0, 2.0, 1.3)
    mass = quad(lambda x: float(z.pdf(x)), 0, 1) + quad(lambda x: float(z.pdf(x)), 1, np.inf)
    assert mass == pytest.approx(1.0, abs=1e-6)


def test_scaled_is_zenga():
    z = Zenga(2, 2, 3)
    s = z.scaled(3.0)
    assert isinstance(s, Zenga) and s.mu == 6.0
    t = np.array([0.2, 0.7])
    assert np.allclose(s.quantile(t), 3 * z.quantile(t), rtol=1e-13)


def test_concurrent_quantiles_identical():
    from concurrent.futures import ThreadPoolExecutor

    z = Zenga(2, 2, 3)
    t = np.linspace(0.01, 0.99, 500)
    with ThreadPoolExecutor(4) as pool:
        outs = list(pool.map(lambda _: z.quantile(t), range(8)))
    assert all(np.array_equal(outs[0], o) for o in outs)
