"""Non-negative income / loss distributions.

A :class:`Distribution` exposes its cdf, survival function and left-continuous
quantile, plus the partial quantile integrals

    lower_integral(p) = int_0^p u(F^-1(t)) dt
    upper_integral(p) = int_p^1 u(F^-1(t)) dt

that every societal function is built from.  Families override these with
closed forms where one exists; the generic fallbacks use adaptive quadrature.

Functions on the unit interval accept an optional complement argument
(``tc = 1 - t``).  Supplying it lets unbounded laws evaluate their upper tail
without the rounding of ``1 - t`` near one.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy import special

from .errors import ConfigError, DomainError, InfiniteMean, NoDensity
from .quadrature import QuadratureConfig, integrate_halfline, integrate_unit

Utility = Callable[[np.ndarray], np.ndarray]

_EPS = np.finfo(float).eps


def _as_unit(t, tc, *, open_lo=True, open_hi=True, what="t"):
    t = np.asarray(t, dtype=float)
    tc = 1.0 - t if tc is None else np.asarray(tc, dtype=float)
    lo_bad = (t <= 0.0) if open_lo else (t < 0.0)
    hi_bad = (tc <= 0.0) if open_hi else (tc < 0.0)
    if np.any(lo_bad | hi_bad | np.isnan(t)):
        lo = "(" if open_lo else "["
        hi = ")" if open_hi else "]"
        raise DomainError(f"{what} must lie in {lo}0, 1{hi}")
    return t, tc


def _apply(u: Utility | None, x):
    return x if u is None else np.asarray(u(x), dtype=float)


class Distribution:
    """Law of a non-negative random variable with finite positive mean."""

    #: Decay exponent of the survival function (``inf`` for light tails).
    tail_index: float = math.inf
    has_density: bool = True

    # -- required per family -------------------------------------------------
    @property
    def mean(self) -> float:
        raise NotImplementedError

    def cdf(self, x):
        raise NotImplementedError

    def _quantile(self, t: np.ndarray, tc: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # -- defaults --------------------------------------------------------------
    def sf(self, x):
        return 1.0 - self.cdf(x)

    def pdf(self, x):
        raise NoDensity(f"{self!r} has no density")

    def quantile(self, t, tc=None):
        """Left-continuous inverse ``inf{x : F(x) >= t}`` for t in (0, 1)."""
        t, tc = _as_unit(t, tc)
        return self._quantile(t, tc)

    @property
    def x_breaks(self) -> tuple[float, ...]:
        """Points where the cdf is not smooth; seeds half-line quadrature."""
        return ()

    @property
    def t_breaks(self) -> tuple[float, ...]:
        """Points in (0, 1) where the quantile is not smooth."""
        return ()

    def lower_integral(self, p, u: Utility | None = None, pc=None, cfg=None):
        p, pc = _as_unit(p, pc, open_lo=False, open_hi=False, what="p")
        return self._partial_integrals(p, pc, u, cfg)[0]

    def upper_integral(self, p, u: Utility | None = None, pc=None, cfg=None):
        p, pc = _as_unit(p, pc, open_lo=False, open_hi=False, what="p")
        return self._partial_integrals(p, pc, u, cfg)[1]

    def _partial_integrals(self, p, pc, u, cfg):
        """Lower and upper quantile integrals by quadrature between sorted cut points.

        Each segment between consecutive requested points is integrated once;
        prefix sums give the lower integrals and suffix sums the upper ones, so
        neither is obtained by subtracting from the total.
        """
        flat, flat_c = p.ravel(), pc.ravel()
        order = np.argsort(flat, kind="stable")
        cuts, idx = np.unique(flat[order], return_index=True)
        cuts_c = flat_c[order][idx]
        lo = np.r_[0.0, cuts]
        hi = np.r_[cuts, 1.0]
        hi_c = np.r_[cuts_c, 0.0]

        def integrand(t, tc):
            return _apply(u, self._quantile(t, tc))

        breaks = self.t_breaks
        seg = np.array([
            integrate_unit(integrand, cfg, breaks, complement=True,
                           lower=a, upper=b, upper_c=bc).value if b > a else 0.0
            for a, b, bc in zip(lo, hi, hi_c)
        ])
        lower_at = np.cumsum(seg)[:-1]
        upper_at = np.cumsum(seg[::-1])[::-1][1:]
        pos = np.searchsorted(cuts, flat)
        return lower_at[pos].reshape(p.shape), upper_at[pos].reshape(p.shape)

    def _conditional_means(self, p, pc, u, cfg):
        """Lower and upper conditional means ``(int_0^p / p, int_p^1 / (1 - p))``."""
        lo, up = self._partial_integrals(p, pc, u, cfg)
        with np.errstate(divide="ignore", invalid="ignore"):
            return lo / p, up / pc

    def expect_utility(self, u: Utility | None = None, cfg=None) -> float:
        """``E[u(X)]`` as the full quantile integral."""
        if u is None:
            return self.mean
        return float(self.upper_integral(0.0, u, cfg=cfg))

    def distortion_integral(self, h: Callable, cfg: QuadratureConfig | None = None) -> float:
        """``int_0^inf h(1 - F(x)) dx`` for a distortion ``h`` with ``h(0) = 0``."""
        return integrate_halfline(lambda x: h(self.sf(x)), cfg, self.x_breaks).value

    def quantile_distortion_integral(self, h: Callable, dh: Callable, cfg=None) -> float:
        """``int_0^1 F^-1(t) h'(1 - t) dt``; ``h`` is used by exact overrides only."""

        def integrand(t, tc):
            return self._quantile(t, tc) * dh(tc)

        return integrate_unit(integrand, cfg, self.t_breaks, complement=True).value

    def power_moment(self, gamma: float, cfg=None) -> float:
        """``E[X**gamma]`` by the layer-cake integral of ``P(X**gamma > y)``."""
        if gamma <= 0:
            raise DomainError("power_moment needs gamma > 0")
        pts = [b**gamma for b in self.x_breaks if b > 0]
        return integrate_halfline(lambda y: self.sf(y ** (1.0 / gamma)), cfg, pts).value

    def scaled(self, scale: float, shift: float = 0.0) -> "Distribution":
        """Law of ``scale * X + shift``."""
        return Affine(self, scale, shift)


def transform_affine(d: Distribution, scale: float, shift: float = 0.0) -> Distribution:
    """Law of ``scale * X + shift`` with ``scale > 0`` and ``shift >= 0``."""
    if not scale > 0:
        raise DomainError(f"scale must be positive, got {scale}")
    if not shift >= 0:
        raise DomainError(f"shift must be non-negative, got {shift}")
    if scale == 1.0 and shift == 0.0:
        return d
    return d.scaled(float(scale), float(shift))


@dataclass(frozen=True)
class Uniform(Distribution):
    a: float = 0.0
    b: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.a < self.b < math.inf):
            raise DomainError(f"Uniform needs 0 <= a < b, got ({self.a}, {self.b})")

    @property
    def mean(self):
        return 0.5 * (self.a + self.b)

    def cdf(self, x):
        return np.clip((np.asarray(x, float) - self.a) / (self.b - self.a), 0.0, 1.0)

    def sf(self, x):
        return np.clip((self.b - np.asarray(x, float)) / (self.b - self.a), 0.0, 1.0)

    def pdf(self, x):
        x = np.asarray(x, float)
        return np.where((x >= self.a) & (x <= self.b), 1.0 / (self.b - self.a), 0.0)

    def _quantile(self, t, tc):
        w = self.b - self.a
        return np.where(t <= 0.5, self.a + w * t, self.b - w * tc)

    @property
    def x_breaks(self):
        return (self.a, self.b) if self.a > 0 else (self.b,)

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        w = self.b - self.a
        lower = self.a * p + 0.5 * w * p * p
        upper = self.a * pc + 0.5 * w * pc * (1.0 + p)
        return lower, upper

    def scaled(self, scale, shift=0.0):
        return Uniform(scale * self.a + shift, scale * self.b + shift)


def _neg_log1m_integral(p):
    """``int_0^p -log(1 - t) dt = p + (1 - p) log(1 - p)``, accurate for small p."""
    shape = np.shape(p)
    p = np.atleast_1d(np.asarray(p, float))
    out = np.empty_like(p)
    small = p < 0.05
    ps = p[small]
    # sum_{k>=1} p^(k+1) / (k (k+1))
    acc = np.zeros_like(ps)
    term = ps.copy()
    for k in range(1, 40):
        term = term * ps
        acc += term / (k * (k + 1))
    out[small] = acc
    pl = p[~small]
    out[~small] = pl + (1.0 - pl) * np.log1p(-pl)
    return out.reshape(shape)


@dataclass(frozen=True)
class Exponential(Distribution):
    rate: float = 1.0

    def __post_init__(self):
        if not (0 < self.rate < math.inf):
            raise DomainError(f"Exponential rate must be positive, got {self.rate}")

    @property
    def mean(self):
        return 1.0 / self.rate

    def cdf(self, x):
        x = np.asarray(x, float)
        return np.where(x > 0, -np.expm1(-self.rate * np.maximum(x, 0.0)), 0.0)

    def sf(self, x):
        x = np.asarray(x, float)
        return np.where(x > 0, np.exp(-self.rate * np.maximum(x, 0.0)), 1.0)

    def pdf(self, x):
        x = np.asarray(x, float)
        return np.where(x >= 0, self.rate * np.exp(-self.rate * np.maximum(x, 0.0)), 0.0)

    def _quantile(self, t, tc):
        with np.errstate(divide="ignore"):
            return np.where(t <= 0.5, -np.log1p(-np.minimum(t, 0.5)), -np.log(tc)) / self.rate

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        with np.errstate(divide="ignore", invalid="ignore"):
            log_pc = np.where(pc > 0, np.log(np.where(pc > 0, pc, 1.0)), 0.0)
        upper = pc * (1.0 - log_pc) / self.rate
        lower = np.where(p < 0.5, _neg_log1m_integral(np.minimum(p, 0.5)),
                         p + pc * log_pc) / self.rate
        return lower, upper

    def scaled(self, scale, shift=0.0):
        if shift == 0.0:
            return Exponential(self.rate / scale)
        return Affine(self, scale, shift)


@dataclass(frozen=True)
class Pareto(Distribution):
    """Pareto law with survival ``(scale / x)**shape`` for ``x >= scale``."""

    scale: float = 1.0
    shape: float = 3.0

    def __post_init__(self):
        if not (0 < self.scale < math.inf):
            raise DomainError(f"Pareto scale must be positive, got {self.scale}")
        if not self.shape > 1:
            raise InfiniteMean(f"Pareto shape {self.shape} <= 1 has an infinite mean")

    @property
    def tail_index(self):
        return self.shape

    @property
    def mean(self):
        return self.scale * self.shape / (self.shape - 1.0)

    def cdf(self, x):
        x = np.asarray(x, float)
        ratio = self.scale / np.maximum(x, self.scale)
        return np.where(x >= self.scale, -np.expm1(self.shape * np.log(ratio)), 0.0)

    def sf(self, x):
        x = np.asarray(x, float)
        return np.where(x >= self.scale, (self.scale / np.maximum(x, self.scale)) ** self.shape, 1.0)

    def pdf(self, x):
        x = np.asarray(x, float)
        xs = np.maximum(x, self.scale)
        return np.where(x >= self.scale, self.shape * self.scale**self.shape / xs ** (self.shape + 1), 0.0)

    def _quantile(self, t, tc):
        with np.errstate(divide="ignore"):
            log_tc = np.where(t <= 0.5, np.log1p(-np.minimum(t, 0.5)), np.log(tc))
        return self.scale * np.exp(-log_tc / self.shape)

    @property
    def x_breaks(self):
        return (self.scale,)

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        k = 1.0 - 1.0 / self.shape
        with np.errstate(divide="ignore"):
            log_pc = np.where(p < 0.5, np.log1p(-np.minimum(p, 0.5)), np.log(pc))
        upper = self.mean * np.exp(k * log_pc)
        lower = -self.mean * np.expm1(k * log_pc)
        return lower, upper

    def scaled(self, scale, shift=0.0):
        if shift == 0.0:
            return Pareto(self.scale * scale, self.shape)
        return Affine(self, scale, shift)


@dataclass(frozen=True)
class Lognormal(Distribution):
    log_mean: float = 0.0
    log_sd: float = 1.0

    def __post_init__(self):
        if not (0 < self.log_sd < math.inf) or not math.isfinite(self.log_mean):
            raise DomainError(f"Lognormal needs finite log_mean and log_sd > 0")

    @property
    def mean(self):
        return math.exp(self.log_mean + 0.5 * self.log_sd**2)

    def _z(self, x):
        x = np.asarray(x, float)
        with np.errstate(divide="ignore"):
            return (np.log(np.maximum(x, 0.0)) - self.log_mean) / self.log_sd

    def cdf(self, x):
        return special.ndtr(self._z(x))

    def sf(self, x):
        return special.ndtr(-self._z(x))

    def pdf(self, x):
        x = np.asarray(x, float)
        z = self._z(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.exp(-0.5 * z * z) / (x * self.log_sd * math.sqrt(2 * math.pi))
        return np.where(x > 0, out, 0.0)

    def _std_normal_q(self, t, tc):
        return np.where(t <= 0.5, special.ndtri(t), -special.ndtri(tc))

    def _quantile(self, t, tc):
        return np.exp(self.log_mean + self.log_sd * self._std_normal_q(t, tc))

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        with np.errstate(divide="ignore"):
            z = np.where(p <= 0.5, special.ndtri(p), -special.ndtri(pc))
        s = self.log_sd
        return self.mean * special.ndtr(z - s), self.mean * special.ndtr(s - z)

    def scaled(self, scale, shift=0.0):
        if shift == 0.0:
            return Lognormal(self.log_mean + math.log(scale), self.log_sd)
        return Affine(self, scale, shift)


@dataclass(frozen=True)
class PointMass(Distribution):
    value: float = 1.0
    has_density = False

    def __post_init__(self):
        if not (0 < self.value < math.inf):
            raise DomainError(f"PointMass needs a positive value, got {self.value}")

    @property
    def mean(self):
        return self.value

    def cdf(self, x):
        return np.where(np.asarray(x, float) >= self.value, 1.0, 0.0)

    def sf(self, x):
        return np.where(np.asarray(x, float) >= self.value, 0.0, 1.0)

    def _quantile(self, t, tc):
        return np.full_like(t, self.value)

    def _partial_integrals(self, p, pc, u, cfg):
        c = float(_apply(u, np.array(self.value)))
        return c * p, c * pc

    def _conditional_means(self, p, pc, u, cfg):
        c = np.full(np.shape(p), float(_apply(u, np.array(self.value))))
        return c, c.copy()

    def distortion_integral(self, h, cfg=None):
        return self.value * float(h(np.array(1.0)))

    def quantile_distortion_integral(self, h, dh, cfg=None):
        return self.value * float(h(np.array(1.0)) - h(np.array(0.0)))

    def power_moment(self, gamma, cfg=None):
        return self.value**gamma

    def scaled(self, scale, shift=0.0):
        return PointMass(scale * self.value + shift)


@dataclass(frozen=True, eq=False)
class Empirical(Distribution):
    """Uniform law on a finite sample (ties and zeros allowed)."""

    values: np.ndarray = field(default_factory=lambda: np.array([1.0]))
    has_density = False

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float).ravel())
        if v.size < 1:
            raise DomainError("Empirical sample must be non-empty")
        if not np.all(np.isfinite(v)) or v[0] < 0:
            raise DomainError("Empirical sample values must be finite and non-negative")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __repr__(self):
        return f"Empirical(n={self.n}, mean={self.mean:.6g})"

    @classmethod
    def from_csv(cls, path: str | Path) -> "Empirical":
        """Read one numeric value per row; a non-numeric first row is a header."""
        values = []
        with open(path, newline="", encoding="utf-8") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                cells = [c.strip() for c in row]
                if len(cells) != 1 or cells[0] == "":
                    raise ConfigError(f"{path}: row {lineno}: expected exactly one value, got {row!r}")
                try:
                    x = float(cells[0])
                except ValueError:
                    if lineno == 1:
                        continue
                    raise ConfigError(f"{path}: row {lineno}: not a number: {cells[0]!r}") from None
                if not math.isfinite(x) or x < 0:
                    raise ConfigError(f"{path}: row {lineno}: value must be finite and >= 0, got {x}")
                values.append(x)
        if not values:
            raise ConfigError(f"{path}: no data rows")
        return cls(np.array(values))

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def mean(self):
        return float(np.mean(self.values))

    def cdf(self, x):
        return np.searchsorted(self.values, np.asarray(x, float), side="right") / self.n

    def sf(self, x):
        return (self.n - np.searchsorted(self.values, np.asarray(x, float), side="right")) / self.n

    def _quantile(self, t, tc):
        tn = t * self.n
        # x_(ceil(t n)); the slack absorbs rounding in t * n.
        k = np.ceil(tn - 8 * _EPS * tn).astype(int)
        return self.values[np.clip(k, 1, self.n) - 1]

    @property
    def t_breaks(self):
        return tuple(np.arange(1, self.n) / self.n)

    def _partial_integrals(self, p, pc, u, cfg):
        n = self.n
        w = _apply(u, self.values) / n
        prefix = np.r_[0.0, np.cumsum(w)]
        suffix = np.r_[np.cumsum(w[::-1])[::-1], 0.0]
        # Lower half: j whole blocks below p.  Upper half: m whole blocks above
        # p, counted from pc so that the partial top block keeps its precision.
        pn = p * n
        j = np.clip(np.floor(pn + 8 * _EPS * pn).astype(int), 0, n)
        wj = w[np.minimum(j, n - 1)]
        lower_a = prefix[j] + np.where(j < n, (p - j / n) * n * wj, 0.0)
        upper_a = suffix[np.minimum(j + 1, n)] + np.where(j < n, ((j + 1) / n - p) * n * wj, 0.0)
        qn = pc * n
        m = np.clip(np.floor(qn + 8 * _EPS * qn).astype(int), 0, n)
        k = np.maximum(n - m - 1, 0)
        wk = w[k]
        upper_b = suffix[n - m] + np.where(m < n, (pc - m / n) * n * wk, 0.0)
        lower_b = prefix[k] + np.where(m < n, ((m + 1) / n - pc) * n * wk, prefix[n - m] - prefix[k])
        top = p > 0.5
        return np.where(top, lower_b, lower_a), np.where(top, upper_b, upper_a)

    def distortion_integral(self, h, cfg=None):
        gaps = np.diff(np.r_[0.0, self.values])
        levels = (self.n - np.arange(self.n)) / self.n
        return math.fsum(gaps * h(levels))

    def quantile_distortion_integral(self, h, dh, cfg=None):
        i = np.arange(1, self.n + 1)
        weights = h(1.0 - (i - 1) / self.n) - h(1.0 - i / self.n)
        return math.fsum(self.values * weights)

    def power_moment(self, gamma, cfg=None):
        return float(np.mean(self.values**gamma))

    def scaled(self, scale, shift=0.0):
        return Empirical(self.values * scale + shift)


@dataclass(frozen=True)
class Affine(Distribution):
    """Law of ``scale * base + shift`` for families not closed under the map."""

    base: Distribution
    scale: float = 1.0
    shift: float = 0.0

    def __post_init__(self):
        if not self.scale > 0 or not self.shift >= 0:
            raise DomainError("Affine needs scale > 0 and shift >= 0")

    @property
    def has_density(self):
        return self.base.has_density

    @property
    def tail_index(self):
        return self.base.tail_index

    @property
    def mean(self):
        return self.scale * self.base.mean + self.shift

    def _inner(self, x):
        return (np.asarray(x, float) - self.shift) / self.scale

    def cdf(self, x):
        return self.base.cdf(self._inner(x))

    def sf(self, x):
        return self.base.sf(self._inner(x))

    def pdf(self, x):
        return self.base.pdf(self._inner(x)) / self.scale

    def _quantile(self, t, tc):
        return self.scale * self.base._quantile(t, tc) + self.shift

    @property
    def x_breaks(self):
        pts = [self.scale * b + self.shift for b in self.base.x_breaks]
        return tuple(sorted({*pts, *([self.shift] if self.shift > 0 else [])}))

    @property
    def t_breaks(self):
        return self.base.t_breaks

    def _partial_integrals(self, p, pc, u, cfg):
        if u is not None:
            return super()._partial_integrals(p, pc, u, cfg)
        lo, up = self.base._partial_integrals(p, pc, None, cfg)
        return self.scale * lo + self.shift * p, self.scale * up + self.shift * pc

    def distortion_integral(self, h, cfg=None):
        return self.shift * float(h(np.array(1.0))) + self.scale * self.base.distortion_integral(h, cfg)

    def quantile_distortion_integral(self, h, dh, cfg=None):
        base = self.base.quantile_distortion_integral(h, dh, cfg)
        return self.scale * base + self.shift * float(h(np.array(1.0)) - h(np.array(0.0)))

    def scaled(self, scale, shift=0.0):
        return Affine(self.base, self.scale * scale, self.shift * scale + shift)
