import math

import numpy as np
import pytest

from ineqlab import (DomainError, Empirical, Exponential, Lognormal, Pareto, PointMass,
                     SocietalFunction, Uniform, Zenga, ZeroLowerMean, bonferroni_curve, lce,
                     lorenz, risk_function, transform_affine, uce)

FAMILIES = [Exponential(1), Uniform(0, 1), Lognormal(0, 0.5), Pareto(1, 3), Zenga(2, 2, 3),
            Uniform(0.5, 1.5), Empirical([1, 1, 2, 5, 11]), PointMass(3)]
P = np.linspace(0.01, 0.99, 99)


def test_lorenz_examples():
    assert np.allclose(lorenz(PointMass(4), P), P, rtol=0, atol=1e-15)
    assert float(lorenz(Uniform(0, 1), 0.5)) == pytest.approx(0.25, abs=1e-14)
    assert float(lorenz(Exponential(1), 0.5)) == pytest.approx(0.5 + 0.5 * math.log(0.5), abs=1e-12)
    s = SocietalFunction(Exponential(1))
    assert float(s.lorenz(0.0)) == 0.0 and float(s.lorenz(1.0)) == pytest.approx(1.0, abs=1e-15)


def test_bonferroni_examples():
    assert np.allclose(bonferroni_curve(PointMass(2), P), 0.0, atol=1e-15)
    assert float(bonferroni_curve(Uniform(0, 1), 0.25)) == pytest.approx(0.75, abs=1e-14)
    assert float(bonferroni_curve(Exponential(1), 0.5)) == pytest.approx(-math.log(0.5), abs=1e-9)


def test_lce_uce_examples():
    assert np.all(lce(PointMass(5), P) == 5.0)
    assert float(lce(Uniform(0, 1), 0.4)) == pytest.approx(0.2)
    assert float(lce(Exponential(1), 1.0)) == pytest.approx(1.0, abs=1e-12)
    assert float(uce(Exponential(1), 0.0)) == pytest.approx(1.0, abs=1e-12)
    assert float(uce(Uniform(0, 1), 0.4)) == pytest.approx(0.7)
    assert np.all(uce(PointMass(5), P) == 5.0)


def test_risk_examples():
    assert np.all(risk_function(PointMass(7), P) == 0.0)
    assert float(risk_function(Uniform(0, 1), 0.5)) == pytest.approx(2.0, abs=1e-13)
    s = SocietalFunction(Exponential(1))
    L = float(s.lorenz(0.3))
    display = 0.3 / (0.7 * L) - 0.3 / 0.7 - 1
    assert float(s.risk(0.3)) == pytest.approx(display, abs=1e-9)


def test_domains():
    s = SocietalFunction(Uniform(0, 1))
    with pytest.raises(DomainError):
        s.lce(0.0)
    with pytest.raises(DomainError):
        s.lce(1e-13)
    with pytest.raises(DomainError):
        s.uce(1.0)
    with pytest.raises(DomainError):
        s.lorenz(1.5)
    with pytest.raises(DomainError):
        s.bonferroni_curve(0.0)
    assert float(s.lce(1e-12)) == pytest.approx(5e-13)


def test_zero_lower_mean():
    s = SocietalFunction(Empirical([0, 0, 0, 4]))
    with pytest.raises(ZeroLowerMean):
        s.risk(0.5)
    assert float(s.risk(0.9)) > 0


@pytest.mark.parametrize("d", FAMILIES, ids=repr)
def test_identities(d):
    s = SocietalFunction(d)
    mu = s.mean
    L = s.lorenz(P)
    lo, up = s.lce(P), s.uce(P)
    assert np.all(L >= -1e-15) and np.all(L <= P + 1e-12)
    assert np.all(np.diff(L) >= -1e-15)
    assert np.allclose(P * lo + (1 - P) * up, mu, rtol=0, atol=1e-9 * max(1, mu))
    assert np.allclose(s.bonferroni_curve(P), 1 - lo / mu, atol=1e-9)
    assert np.all(up >= lo - 1e-12)
    assert np.all(np.diff(lo) >= -1e-12) and np.all(np.diff(up) >= -1e-12)
    R = s.risk(P)
    display = P / ((1 - P) * L) - P / (1 - P) - 1
    assert np.allclose(R, display, rtol=1e-9, atol=1e-9)
    assert np.all(R >= -1e-12)


@pytest.mark.parametrize("d", FAMILIES[:5], ids=repr)
@pytest.mark.parametrize("c", [0.1, 3.0])
def test_scale_invariance(d, c):
    s, t = SocietalFunction(d), SocietalFunction(transform_affine(d, c))
    assert np.allclose(s.lorenz(P), t.lorenz(P), atol=1e-9)
    assert np.allclose(s.bonferroni_curve(P), t.bonferroni_curve(P), atol=1e-9)
    assert np.allclose(s.risk(P), t.risk(P), rtol=1e-9, atol=1e-9)


def test_utility_variant():
    from ineqlab.value_fns import PowerU

    s = SocietalFunction(Uniform(0, 1), PowerU(0.5))
    assert s.mean == pytest.approx(2 / 3, rel=1e-10)
    assert float(s.lce(1.0)) == pytest.approx(2 / 3, rel=1e-10)
    assert float(s.lce(0.25)) == pytest.approx(2 / 3 * 0.25**0.5, rel=1e-10)


def test_curve_rows():
    rows = SocietalFunction(Uniform(0, 1)).curve_rows([0.25, 0.5])
    assert set(rows[0]) == {"p", "L", "B", "LCE", "UCE", "R"}
    assert rows[1]["L"] == pytest.approx(0.25) and rows[1]["R"] == pytest.approx(2.0)


def test_nonpositive_mean_rejected():
    with pytest.raises(DomainError):
        SocietalFunction(Empirical([0, 0, 0]))
