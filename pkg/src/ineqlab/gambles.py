"""Personal gambles: laws on [0, 1] for a person's random position.

A gamble is either an atom or a continuous law.  Continuous gambles can be
built from a convex generator h or a concave generator g with densities

    f_h(t) =  t h''(1 - t) / (1 - h'(0))
    f_g(t) = -(1 - t) g''(1 - t) / (1 - g'(1))

Expectations are quadratures against the density, taken in complement mode
so integrands that depend on ``1 - t`` keep full precision near ``t = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import AtomicGamble, DomainError, InvalidGenerator
from .quadrature import IntegrationResult, QuadratureConfig, integrate_unit
from .special import log_beta

FD_STEP = 1e-5


# -- generators ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class GeneratorFn:
    """A distortion on [0, 1] with first and second derivatives.

    Missing derivatives fall back to central differences with step ``FD_STEP``
    (one-sided within a step of the boundary).
    """

    value: Callable
    d1: Callable | None = None
    d2: Callable | None = None
    name: str = "custom"

    def __call__(self, t):
        return np.asarray(self.value(np.asarray(t, dtype=float)), dtype=float)

    @staticmethod
    def _fd(f, t, order):
        t = np.asarray(t, dtype=float)
        h = FD_STEP
        # shift stencils inward near the ends of [0, 1]
        c = np.clip(t, h if order == 1 else 2 * h, 1 - (h if order == 1 else 2 * h))
        f = lambda x, _f=f: np.asarray(_f(x), dtype=float)
        if order == 1:
            d = (f(c + h) - f(c - h)) / (2 * h)
            return d + (t - c) * (f(c + h) - 2 * f(c) + f(c - h)) / h**2
        return (f(c + h) - 2 * f(c) + f(c - h)) / h**2

    def deriv1(self, t):
        if self.d1 is not None:
            return np.asarray(self.d1(np.asarray(t, dtype=float)), dtype=float)
        return self._fd(self.value, t, 1)

    def deriv2(self, t):
        if self.d2 is not None:
            return np.asarray(self.d2(np.asarray(t, dtype=float)), dtype=float)
        if self.d1 is not None:
            t = np.asarray(t, dtype=float)
            c = np.clip(t, FD_STEP, 1 - FD_STEP)
            return (self.deriv1(c + FD_STEP) - self.deriv1(c - FD_STEP)) / (2 * FD_STEP)
        return self._fd(self.value, t, 2)

    @property
    def slope_at_0(self) -> float:
        return float(self.deriv1(np.array(0.0)))

    @property
    def slope_at_1(self) -> float:
        return float(self.deriv1(np.array(1.0)))

    def __repr__(self):
        return f"GeneratorFn({self.name})"


def power_generator(alpha: float) -> GeneratorFn:
    """``t**alpha``: convex for alpha > 1, concave for alpha in (0, 1)."""
    a = float(alpha)
    if not a > 0:
        raise DomainError("power generator needs alpha > 0")

    def d1(t):
        with np.errstate(divide="ignore"):
            return a * t ** (a - 1.0)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            return a * (a - 1.0) * t ** (a - 2.0)

    return GeneratorFn(lambda t: t**a, d1, d2, name=f"power:{a:g}")


def exp_h_generator(c: float) -> GeneratorFn:
    """Convex ``(exp(c t) - 1) / (exp(c) - 1)`` for c > 0."""
    c = float(c)
    if not c > 0:
        raise DomainError("exponential h generator needs c > 0")
    k = math.expm1(c)
    return GeneratorFn(
        lambda t: np.expm1(c * t) / k,
        lambda t: c * np.exp(c * t) / k,
        lambda t: c * c * np.exp(c * t) / k,
        name=f"exp_h:{c:g}",
    )


def exp_g_generator(c: float) -> GeneratorFn:
    """Concave ``(1 - exp(-c t)) / (1 - exp(-c))`` for c > 0."""
    c = float(c)
    if not c > 0:
        raise DomainError("exponential g generator needs c > 0")
    k = -math.expm1(-c)
    return GeneratorFn(
        lambda t: -np.expm1(-c * t) / k,
        lambda t: c * np.exp(-c * t) / k,
        lambda t: -c * c * np.exp(-c * t) / k,
        name=f"exp_g:{c:g}",
    )


@dataclass
class GeneratorReport:
    cls: str
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, what: str, points=()):
        self.violations.append({"check": what, "points": [float(p) for p in points][:20]})


def validate_generator(f: GeneratorFn, cls: str, grid: int = 1000) -> GeneratorReport:
    """Check class (H) (convex) or (G) (concave) conditions on a grid.

    Boundary values must hold within 1e-12, the second derivative must carry
    the right sign at interior grid points, the distinguished slope (h'(0) or
    g'(1)) must differ from 1, and analytic derivatives must agree with
    finite differences within 1e-5 (relative to their size).
    """
    cls = cls.upper()
    if cls not in ("H", "G"):
        raise DomainError("generator class must be 'H' or 'G'")
    rep = GeneratorReport(cls)
    v0, v1 = float(f(np.array(0.0))), float(f(np.array(1.0)))
    if abs(v0) > 1e-12:
        rep.add(f"value at 0 is {v0!r}, expected 0", [0.0])
    if abs(v1 - 1.0) > 1e-12:
        rep.add(f"value at 1 is {v1!r}, expected 1", [1.0])
    t = np.linspace(0.0, 1.0, grid + 1)[1:-1]
    with np.errstate(all="ignore"):
        d2 = f.deriv2(t)
    bad = ~np.isfinite(d2) | ((d2 < -1e-12 * (1 + np.abs(d2))) if cls == "H" else (d2 > 1e-12 * (1 + np.abs(d2))))
    if np.any(bad):
        rep.add("second derivative has the wrong sign" if cls == "H" else
                "second derivative is positive (not concave)", t[bad])
    slope = f.slope_at_0 if cls == "H" else f.slope_at_1
    if not np.isfinite(slope) or abs(slope - 1.0) < 1e-12:
        rep.add(("h'(0)" if cls == "H" else "g'(1)") + f" = {slope!r} must be finite and differ from 1")
    # derivative consistency, away from the ends where power laws may blow up
    inner = t[(t >= 0.01) & (t <= 0.99)]
    for order, analytic in ((1, f.d1), (2, f.d2)):
        if analytic is None:
            continue
        exact = f.deriv1(inner) if order == 1 else f.deriv2(inner)
        approx = GeneratorFn._fd(f.value, inner, order)
        scale = 1e-5 * np.maximum(1.0, np.abs(exact)) * (1 if order == 1 else 10)
        off = np.abs(exact - approx) > scale
        if np.any(off):
            rep.add(f"derivative of order {order} disagrees with finite differences", inner[off])
    return rep


def require_generator(f: GeneratorFn, cls: str) -> GeneratorFn:
    rep = validate_generator(f, cls)
    if not rep.valid:
        raise InvalidGenerator(f"{f.name} is not a class ({cls.upper()}) generator: "
                               + "; ".join(v["check"] for v in rep.violations), report=rep)
    return f


# -- gambles -------------------------------------------------------------------------
class Gamble:
    is_atom: bool = False
    #: singular points of the density inside (0, 1)
    breaks: tuple = ()

    def density(self, t, tc=None):
        raise AtomicGamble(f"{self!r} is an atom and has no density")

    def _pdf(self, t, tc):
        raise NotImplementedError

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, 1.0)

    def integrate(self, phi, cfg: QuadratureConfig | None = None, points=(),
                  complement: bool = False) -> IntegrationResult:
        """``E[phi(pi)]`` with its error estimate.

        With ``complement=True`` phi is called as ``phi(t, 1 - t)``.
        """
        lo, hi = self.support

        def f(t, tc):
            w = self._pdf(t, tc)
            v = phi(t, tc) if complement else phi(t)
            return np.where(w == 0, 0.0, w * v)

        return integrate_unit(f, cfg, (*self.breaks, *points), complement=True,
                              lower=lo, upper=hi)

    def expect(self, phi, cfg=None, points=(), complement: bool = False) -> float:
        return self.integrate(phi, cfg, points, complement).value


def _checked_unit(t, tc):
    t = np.asarray(t, dtype=float)
    tc = 1.0 - t if tc is None else np.asarray(tc, dtype=float)
    if np.any((t < 0) | (tc < 0)):
        raise DomainError("gamble density needs t in [0, 1]")
    return t, tc


@dataclass(frozen=True)
class BetaGamble(Gamble):
    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError("Beta gamble needs positive shape parameters")

    def density(self, t, tc=None):
        return self._pdf(*_checked_unit(t, tc))

    def _pdf(self, t, tc):
        with np.errstate(divide="ignore"):
            log_f = (self.a - 1) * np.log(t) + (self.b - 1) * np.log(tc) - log_beta(self.a, self.b)
        return np.exp(log_f)

    @property
    def mean(self):
        return self.a / (self.a + self.b)


@dataclass(frozen=True)
class PointGamble(Gamble):
    p: float = 0.5
    is_atom = True

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise DomainError("point gamble needs p in [0, 1]")

    @property
    def support(self):
        return (self.p, self.p)

    def integrate(self, phi, cfg=None, points=(), complement=False):
        t = np.array([self.p])
        v = phi(t, 1.0 - t) if complement else phi(t)
        return IntegrationResult(float(np.asarray(v, dtype=float).ravel()[0]), 0.0, 1)


@dataclass(frozen=True, eq=False)
class HGenerated(Gamble):
    h: GeneratorFn
    validate: bool = True

    def __post_init__(self):
        if self.validate:
            require_generator(self.h, "H")

    def density(self, t, tc=None):
        return self._pdf(*_checked_unit(t, tc))

    def _pdf(self, t, tc):
        return t * self.h.deriv2(tc) / (1.0 - self.h.slope_at_0)


@dataclass(frozen=True, eq=False)
class GGenerated(Gamble):
    g: GeneratorFn
    validate: bool = True

    def __post_init__(self):
        if self.validate:
            require_generator(self.g, "G")

    def density(self, t, tc=None):
        return self._pdf(*_checked_unit(t, tc))

    def _pdf(self, t, tc):
        return -tc * self.g.deriv2(tc) / (1.0 - self.g.slope_at_1)


@dataclass(frozen=True, eq=False)
class TruncatedGamble(Gamble):
    """A continuous gamble conditioned on ``[lo, hi]``."""

    base: Gamble
    lo: float = 0.01
    hi: float = 0.99
    _mass: list = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        if self.base.is_atom:
            raise AtomicGamble("cannot truncate an atom")
        if not 0.0 <= self.lo < self.hi <= 1.0:
            raise DomainError("truncation needs 0 <= lo < hi <= 1")
        m = integrate_unit(lambda t, tc: self.base._pdf(t, tc), None, self.base.breaks,
                           complement=True, lower=self.lo, upper=self.hi).value
        if not m > 0:
            raise DomainError("truncation interval carries no probability")
        self._mass.append(m)

    @property
    def support(self):
        return (self.lo, self.hi)

    def density(self, t, tc=None):
        t, tc = _checked_unit(t, tc)
        inside = (t >= self.lo) & (t <= self.hi)
        return np.where(inside, self._pdf(t, tc), 0.0)

    def _pdf(self, t, tc):
        return self.base._pdf(t, tc) / self._mass[0]

    @property
    def breaks(self):
        return self.base.breaks


# -- pairs ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class GamblePair:
    """Joint law of (pi, pi*): identical, independent, or with a degenerate member."""

    first: Gamble
    second: Gamble | None = None
    identical: bool = False

    def __post_init__(self):
        if self.identical and self.second is not None and self.second is not self.first:
            raise DomainError("an identical pair takes a single gamble")
        if not self.identical and self.second is None:
            raise DomainError("a non-identical pair needs two gambles")

    @classmethod
    def same(cls, g: Gamble) -> "GamblePair":
        return cls(g, None, identical=True)

    @classmethod
    def independent(cls, g: Gamble, g_star: Gamble) -> "GamblePair":
        return cls(g, g_star)

    @property
    def kind(self) -> str:
        if self.identical:
            return "identical"
        if self.second.is_atom:
            return "degenerate_second"
        if self.first.is_atom:
            return "degenerate_first"
        return "independent"

    @property
    def star(self) -> Gamble:
        return self.first if self.identical else self.second

    def integrate(self, psi, cfg=None, points=(), complement=False) -> IntegrationResult:
        """``E[psi(pi, pi*)]``.

        ``psi(p, q)``, or ``psi(p, 1 - p, q, 1 - q)`` when ``complement`` is set.
        """
        def call(p, pc, q, qc):
            return psi(p, pc, q, qc) if complement else psi(p, q)

        kind = self.kind
        if kind == "identical":
            return self.first.integrate(lambda t, tc: call(t, tc, t, tc), cfg, points, True)
        if kind == "degenerate_second":
            q = np.array([self.second.p])
            return self.first.integrate(
                lambda t, tc: call(t, tc, np.broadcast_to(q, t.shape), np.broadcast_to(1.0 - q, t.shape)),
                cfg, points, True)
        if kind == "degenerate_first":
            p = np.array([self.first.p])
            return self.second.integrate(
                lambda t, tc: call(np.broadcast_to(p, t.shape), np.broadcast_to(1.0 - p, t.shape), t, tc),
                cfg, points, True)
        outer_cfg = QuadratureConfig(rel_tol=1e-8, abs_tol=1e-10)
        inner_cfg = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-11)
        if cfg is not None:
            outer_cfg = QuadratureConfig(max(cfg.rel_tol, 1e-8), max(cfg.abs_tol, 1e-10), cfg.max_subdivisions)
            inner_cfg = QuadratureConfig(max(cfg.rel_tol / 10, 1e-9), max(cfg.abs_tol / 10, 1e-11),
                                         cfg.max_subdivisions)
        inner_err = []

        def outer(t, tc):
            out = np.empty_like(t)
            for i in range(t.size):
                ti, tci = t[i:i + 1], tc[i:i + 1]
                r = self.second.integrate(
                    lambda s, sc: call(np.broadcast_to(ti, s.shape), np.broadcast_to(tci, s.shape), s, sc),
                    inner_cfg, points, True)
                inner_err.append(r.abs_error_estimate)
                out[i] = r.value
            return out

        res = self.first.integrate(outer, outer_cfg, points, True)
        return IntegrationResult(res.value, res.abs_error_estimate + max(inner_err, default=0.0),
                                 res.subdivisions)

    def expect(self, psi, cfg=None, points=(), complement=False) -> float:
        return self.integrate(psi, cfg, points, complement).value


def expect(g: Gamble, phi, cfg=None) -> float:
    return g.expect(phi, cfg)


def expect_pair(gp: GamblePair, psi, cfg=None) -> float:
    return gp.expect(psi, cfg)


def density(g: Gamble, t):
    return g.density(t)
