"""Zenga (2010) three-parameter income distribution.

With ``y = x / mu``, ``b = theta - 1`` and ``P(a, z) = int_0^z t^(a-1) (1-t)^(b-1) dt``
the density is

    f(x) = y^-1.5 P(alpha + 1/2, y) / (2 mu B(alpha, theta))      x <  mu
    f(x) = y^-1.5 P(alpha + 1/2, 1/y) / (2 mu B(alpha, theta))    x >= mu

Swapping the order of integration in the inner integral gives closed forms
for the cdf below ``mu``, the survival function above it, and both partial
first moments, each a difference of incomplete beta values:

    F(x)   = [P(alpha, y) - y^-1/2 P(alpha + 1/2, y)] / B            y <= 1
    S(x)   = [c^1/2 P(alpha + 1/2, c) - P(alpha + 1, c)] / B         c = 1/y <= 1
    M(x)   = mu [y^1/2 P(alpha + 1/2, y) - P(alpha + 1, y)] / B      int_0^x s f(s) ds
    U(x)   = mu [P(alpha, c) - c^-1/2 P(alpha + 1/2, c)] / B         int_x^inf s f(s) ds

``M(mu) + U(mu) = mu`` and ``F(mu) + S(mu) = 1`` reduce to
``B(alpha, theta - 1) - B(alpha + 1, theta - 1) = B(alpha, theta)``, so the mean
is ``mu``.  The survival function decays like ``x^-(alpha + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distributions import Affine, Distribution, _as_unit
from .errors import DomainError, NonConvergence
from .special import beta_partial, log_beta

_TABLE_SIZE = 161
_MAX_STEPS = 200
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Zenga(Distribution):
    mu: float = 1.0
    alpha: float = 2.0
    theta: float = 3.0
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (self.mu > 0 and self.alpha > 0 and self.theta > 0):
            raise DomainError("Zenga parameters must all be positive")
        if not self.theta > 1:
            # P(., 1) diverges for theta <= 1: the density is unbounded at x = mu.
            raise DomainError(f"Zenga needs theta > 1 for a finite density at x = mu, got {self.theta}")
        B = math.exp(log_beta(self.alpha, self.theta))
        f_mu = float(self._F(np.array(1.0)))
        s_mu = float(self._S(np.array(1.0)))
        if not abs(f_mu + s_mu - 1.0) < 1e-10:
            raise DomainError(f"Zenga{self.mu, self.alpha, self.theta} fails normalization")
        # Cached inversion tables: (y, F(y)) on (0, 1] and (c, S(c)) on (0, 1].
        grid = np.geomspace(1e-8, 1.0, _TABLE_SIZE)
        self._cache.update(
            B=B, F_mu=f_mu, S_mu=s_mu, grid=grid,
            F_table=self._F(grid), S_table=self._S(grid),
        )

    # -- closed forms on the reduced variables ---------------------------------
    def _P(self, a, z):
        return beta_partial(a, self.theta - 1.0, z)

    @property
    def _B(self):
        return self._cache.get("B") or math.exp(log_beta(self.alpha, self.theta))

    def _F(self, y):
        a = self.alpha
        return (self._P(a, y) - y**-0.5 * self._P(a + 0.5, y)) / self._B

    def _S(self, c):
        a = self.alpha
        return (c**0.5 * self._P(a + 0.5, c) - self._P(a + 1.0, c)) / self._B

    def _dF(self, y):
        return y**-1.5 * self._P(self.alpha + 0.5, y) / (2 * self._B)

    def _dS(self, c):
        return c**-0.5 * self._P(self.alpha + 0.5, c) / (2 * self._B)

    def _M(self, y):
        a = self.alpha
        return self.mu * (y**0.5 * self._P(a + 0.5, y) - self._P(a + 1.0, y)) / self._B

    def _U(self, c):
        a = self.alpha
        return self.mu * (self._P(a, c) - c**-0.5 * self._P(a + 0.5, c)) / self._B

    # -- Distribution interface -------------------------------------------------
    @property
    def mean(self):
        return self.mu

    @property
    def tail_index(self):
        return self.alpha + 1.0

    @property
    def x_breaks(self):
        return (self.mu,)

    def _split(self, x):
        x = np.asarray(x, dtype=float)
        y = np.maximum(x, 0.0) / self.mu
        low = (y > 0) & (y < 1.0)
        high = y >= 1.0
        return x, y, low, high

    def pdf(self, x):
        x, y, low, high = self._split(x)
        out = np.zeros_like(y)
        norm = 1.0 / (2 * self.mu * self._B)
        out[low] = norm * y[low] ** -1.5 * self._P(self.alpha + 0.5, y[low])
        out[high] = norm * y[high] ** -1.5 * self._P(self.alpha + 0.5, 1.0 / y[high])
        return out

    def cdf(self, x):
        x, y, low, high = self._split(x)
        out = np.zeros_like(y)
        out[low] = self._F(y[low])
        out[high] = 1.0 - self._S(1.0 / y[high])
        return out

    def sf(self, x):
        x, y, low, high = self._split(x)
        out = np.ones_like(y)
        out[low] = 1.0 - self._F(y[low])
        out[high] = self._S(1.0 / y[high])
        return out

    def _invert(self, G, dG, target, table):
        """Solve ``G(z) = target`` for z in (0, 1], G increasing from 0.

        Newton steps on log G against log z (G is close to a power law near 0),
        safeguarded by a bracket that starts from the cached table and is grown
        geometrically downwards for targets below its first entry.
        """
        grid = self._cache["grid"]
        target = np.asarray(target, dtype=float)
        idx = np.searchsorted(table, target)
        lo = np.where(idx > 0, grid[np.maximum(idx - 1, 0)], grid[0])
        hi = np.where(idx < grid.size, grid[np.minimum(idx, grid.size - 1)], 1.0)
        below = idx == 0
        if np.any(below):
            lo_b = lo[below].copy()
            for _ in range(_MAX_STEPS):
                g = G(lo_b)
                if np.all(g < target[below]):
                    break
                lo_b = np.where(g < target[below], lo_b, lo_b * 1e-4)
            else:
                raise NonConvergence("Zenga quantile: could not bracket small probabilities")
            lo[below] = lo_b
        lo, hi = np.log(lo), np.log(hi)
        log_t = np.log(target)
        z = 0.5 * (lo + hi)
        active = np.ones(target.shape, dtype=bool)
        for _ in range(_MAX_STEPS):
            za = np.exp(z[active])
            g = G(za)
            with np.errstate(divide="ignore", invalid="ignore"):
                resid = np.log(g) - log_t[active]
                slope = za * dG(za) / g
            lo_a = np.where(resid < 0, z[active], lo[active])
            hi_a = np.where(resid < 0, hi[active], z[active])
            with np.errstate(divide="ignore", invalid="ignore"):
                step = z[active] - resid / slope
            inside = (step > lo_a) & (step < hi_a)
            new = np.where(inside, step, 0.5 * (lo_a + hi_a))
            done = (np.abs(resid) < 1e-14) | (hi_a - lo_a < 4 * _EPS * np.maximum(1.0, np.abs(z[active])))
            lo[active], hi[active] = lo_a, hi_a
            z[active] = np.where(done, z[active], new)
            active[np.flatnonzero(active)[done]] = False
            if not active.any():
                return np.exp(z)
        raise NonConvergence(f"Zenga quantile bisection did not converge in {_MAX_STEPS} steps")

    def _reduced_quantile(self, t, tc):
        """Return (y, c, low) with y = x / mu for low entries and c = mu / x otherwise."""
        t = np.atleast_1d(t)
        tc = np.atleast_1d(tc)
        low = t <= self._cache["F_mu"]
        y = np.ones_like(t)
        c = np.ones_like(t)
        if np.any(low):
            y[low] = self._invert(self._F, self._dF, t[low], self._cache["F_table"])
        if np.any(~low):
            c[~low] = self._invert(self._S, self._dS, tc[~low], self._cache["S_table"])
        return y, c, low

    def _quantile(self, t, tc):
        shape = np.shape(t)
        y, c, low = self._reduced_quantile(t, tc)
        return (self.mu * np.where(low, y, 1.0 / c)).reshape(shape)

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        shape = np.shape(p)
        p, pc = np.atleast_1d(p).ravel(), np.atleast_1d(pc).ravel()
        lower = np.zeros_like(p)
        upper = np.zeros_like(p)
        inner = (p > 0) & (pc > 0)
        lower[pc <= 0] = self.mu
        upper[p <= 0] = self.mu
        if np.any(inner):
            y, c, low = self._reduced_quantile(p[inner], pc[inner])
            m = np.where(low, self._M(np.where(low, y, 0.5)), 0.0)
            uu = np.where(~low, self._U(np.where(~low, c, 0.5)), 0.0)
            lower[inner] = np.where(low, m, self.mu - uu)
            upper[inner] = np.where(low, self.mu - m, uu)
        return lower.reshape(shape), upper.reshape(shape)

    def scaled(self, scale, shift=0.0):
        if shift == 0.0:
            return Zenga(self.mu * scale, self.alpha, self.theta)
        return Affine(self, scale, shift)


def zenga_pdf(params: Zenga, x):
    """Density at x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("zenga_pdf needs x > 0")
    return params.pdf(x)


def zenga_cdf(params: Zenga, x):
    return params.cdf(x)


def zenga_quantile(params: Zenga, t):
    t, tc = _as_unit(t, None)
    return params._quantile(t, tc)
