import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate as sp_integrate
from scipy import stats

from ineqlab import (Affine, ConfigError, DomainError, Empirical, Exponential, InfiniteMean,
                     Lognormal, Pareto, PointMass, Uniform, Zenga, integrate_halfline,
                     transform_affine)
from ineqlab.value_fns import PowerU

T = np.linspace(0.001, 0.999, 257)


def scipy_law(d):
    if isinstance(d, Uniform):
        return stats.uniform(d.a, d.b - d.a)
    if isinstance(d, Exponential):
        return stats.expon(scale=1 / d.rate)
    if isinstance(d, Pareto):
        return stats.pareto(d.shape, scale=d.scale)
    if isinstance(d, Lognormal):
        return stats.lognorm(d.log_sd, scale=math.exp(d.log_mean))
    raise TypeError(d)


PARAMETRIC = [Uniform(0, 1), Uniform(2, 5), Exponential(1), Exponential(2.5), Pareto(1, 3),
              Pareto(2, 1.5), Lognormal(0, 0.5), Lognormal(1, 1.2)]


@pytest.mark.parametrize("d", PARAMETRIC, ids=repr)
def test_against_scipy_stats(d):
    ref = scipy_law(d)
    x = ref.ppf(T)
    assert np.allclose(d.quantile(T), x, rtol=1e-12)
    assert np.allclose(d.cdf(x), T, rtol=1e-12)
    assert np.allclose(d.sf(x), 1 - T, rtol=1e-10)
    assert np.allclose(d.pdf(x), ref.pdf(x), rtol=1e-12)
    assert d.mean == pytest.approx(ref.mean(), rel=1e-14)


@pytest.mark.parametrize("d", PARAMETRIC, ids=repr)
def test_layer_cake_mean(d):
    res = integrate_halfline(d.sf, points=d.x_breaks)
    assert res.value == pytest.approx(d.mean, abs=1e-8)


@pytest.mark.parametrize("d", PARAMETRIC, ids=repr)
def test_partial_integrals_against_scipy_quad(d):
    for p in (0.01, 0.4, 0.9, 0.999):
        lo = sp_integrate.quad(lambda t: float(d.quantile(t)), 0, p, epsabs=1e-13, limit=200)[0]
        assert float(d.lower_integral(p)) == pytest.approx(lo, rel=1e-9, abs=1e-12)
        up = sp_integrate.quad(lambda t: float(d.quantile(t)), p, 1, epsabs=1e-13, limit=200)[0]
        assert float(d.upper_integral(p)) == pytest.approx(up, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("d", PARAMETRIC + [PointMass(2.0), Empirical([0, 1, 1, 3, 7])], ids=repr)
def test_galois_property(d):
    xs = np.unique(np.concatenate([d.quantile(T), np.linspace(0, 10, 101)]))
    q = d.quantile(T)[:, None]
    F = d.cdf(xs)[None, :]
    assert np.array_equal(q <= xs[None, :], T[:, None] <= F + 1e-15)


def test_cdf_examples():
    assert float(Uniform(0, 1).cdf(0.3)) == pytest.approx(0.3)
    assert float(Exponential(1).cdf(0.0)) == 0.0
    assert float(Empirical([1, 2, 3]).cdf(2.0)) == pytest.approx(2 / 3)


def test_quantile_examples():
    assert float(Exponential(1).quantile(1 - math.exp(-1))) == pytest.approx(1.0, abs=1e-12)
    assert np.all(PointMass(5).quantile(T) == 5)
    assert float(Empirical([1, 2, 3]).quantile(0.5)) == 2.0


def test_mean_examples():
    assert Uniform(0, 1).mean == 0.5
    assert Exponential(2).mean == 0.5
    assert Empirical([1, 2, 3]).mean == 2.0


@pytest.mark.parametrize("t", [0.0, 1.0, -0.1, 1.5, float("nan")])
def test_quantile_domain(t):
    with pytest.raises(DomainError):
        Exponential(1).quantile(t)


def test_construction_errors():
    with pytest.raises(InfiniteMean):
        Pareto(1, 1.0)
    with pytest.raises(DomainError):
        Uniform(1, 1)
    with pytest.raises(DomainError):
        Uniform(-1, 1)
    with pytest.raises(DomainError):
        Exponential(0)
    with pytest.raises(DomainError):
        PointMass(0)
    with pytest.raises(DomainError):
        Empirical([])
    with pytest.raises(DomainError):
        Empirical([1, -2])


def test_transform_affine_examples():
    d = transform_affine(Exponential(1), 2.0, 0.0)
    assert np.allclose(d.quantile(T), -2 * np.log1p(-T), rtol=1e-13)
    assert transform_affine(PointMass(1), 3, 2) == PointMass(5)
    u = transform_affine(Uniform(0, 1), 1, 1)
    assert u.mean == pytest.approx(1.5)
    assert float(u.cdf(1.5)) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        transform_affine(Uniform(0, 1), 0.0)
    with pytest.raises(DomainError):
        transform_affine(Uniform(0, 1), 1.0, -1.0)


@pytest.mark.parametrize("d", PARAMETRIC + [Empirical([1, 2, 2, 9]), Zenga(2, 2, 3)], ids=repr)
@pytest.mark.parametrize("scale, shift", [(0.1, 0.0), (3.0, 0.5), (1.0, 2.0)])
def test_transform_affine_quantiles(d, scale, shift):
    a = transform_affine(d, scale, shift)
    assert np.allclose(a.quantile(T), scale * d.quantile(T) + shift, rtol=1e-12)
    assert a.mean == pytest.approx(scale * d.mean + shift, rel=1e-12)
    x = a.quantile(T)
    assert np.all(np.diff(a.cdf(x)) >= 0)
    p = np.array([0.1, 0.5, 0.95])
    assert np.allclose(a.lower_integral(p), scale * d.lower_integral(p) + shift * p, rtol=1e-10)


def test_generic_affine_wrapper():
    d = Affine(Lognormal(0, 0.5), 2.0, 1.0)
    assert d.mean == pytest.approx(2 * math.exp(0.125) + 1)
    res = integrate_halfline(d.sf, points=d.x_breaks)
    assert res.value == pytest.approx(d.mean, abs=1e-8)


def test_empirical_partial_sums():
    v = np.array([1.0, 1.0, 1.0, 1.0, 10.0])
    d = Empirical(v)
    # exact partial sums with a fractional last block
    # sum of the lowest k values divided by n, plus the fractional block
    for p, lo in [(0.4, 0.4), (0.5, 0.5), (0.9, 1.8), (0.2, 0.2), (1.0, 2.8)]:
        assert float(d.lower_integral(p)) == pytest.approx(lo, rel=1e-14)
    assert float(d.upper_integral(0.9)) == pytest.approx(1.0, rel=1e-14)


def test_empirical_upper_precision_near_one():
    d = Empirical([1.0, 2.0, 4.0, 8.0])
    pc = np.array([1e-3, 1e-9, 1e-14])
    up = d.upper_integral(1 - pc, pc=pc)
    assert np.allclose(up / pc, 8.0, rtol=1e-13)


def test_utility_partials():
    d = Uniform(0, 1)
    u = PowerU(0.5)
    assert d.expect_utility(u) == pytest.approx(2 / 3, rel=1e-10)
    assert float(d.lower_integral(0.25, u)) == pytest.approx(2 / 3 * 0.25**1.5, rel=1e-10)


def test_csv_ingestion(tmp_path):
    good = tmp_path / "good.csv"
    good.write_text("income\n1\n1\n1\n1\n10\n")
    d = Empirical.from_csv(good)
    assert d.n == 5 and d.mean == pytest.approx(2.8)
    bad = tmp_path / "bad.csv"
    bad.write_text("1\n2\nabc\n")
    with pytest.raises(ConfigError, match="row 3"):
        Empirical.from_csv(bad)
    neg = tmp_path / "neg.csv"
    neg.write_text("1\n-2\n")
    with pytest.raises(ConfigError, match="row 2"):
        Empirical.from_csv(neg)
    empty = tmp_path / "empty.csv"
    empty.write_text("header\n")
    with pytest.raises(ConfigError):
        Empirical.from_csv(empty)


@settings(max_examples=200)
@given(st.lists(st.floats(0, 1e3), min_size=1, max_size=30), st.floats(0.001, 0.999))
def test_empirical_lower_integral_brute_force(values, p):
    """Exact partial sums match a brute-force block decomposition of the quantile."""
    d = Empirical(values)
    if d.mean == 0:
        return
    v = np.sort(values)
    n = v.size
    edges = np.arange(n + 1) / n
    brute = sum(v[i] * max(0.0, min(p, edges[i + 1]) - edges[i]) for i in range(n))
    assert float(d.lower_integral(p)) == pytest.approx(brute, rel=1e-12, abs=1e-12)
