"""Lorenz, Bonferroni, conditional-expectation and risk functions of a law.

``lce(p)`` is the mean of ``u(X)`` over the poorest fraction p and ``uce(p)``
the mean over the richest fraction ``1 - p``; everything else is built from
the two partial quantile integrals of the underlying distribution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .distributions import Distribution, _as_unit
from .errors import DomainError, ZeroLowerMean
from .quadrature import QuadratureConfig
from .value_fns import UtilityFn

LCE_MIN_P = 1e-12
UCE_MAX_P = 1.0 - 1e-12


@dataclass(frozen=True, eq=False)
class SocietalFunction:
    base: Distribution
    utility: UtilityFn | None = None
    cfg: QuadratureConfig | None = None
    _mean: list = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        if self.utility is not None and getattr(self.utility, "is_identity", False):
            object.__setattr__(self, "utility", None)
        m = self.mean
        if not (np.isfinite(m) and m > 0):
            raise DomainError(f"mean of the (utility-transformed) variable must be positive, got {m}")

    @property
    def mean(self) -> float:
        """``E[u(X)]``, computed once."""
        if not self._mean:
            self._mean.append(float(self.base.expect_utility(self.utility, self.cfg)))
        return self._mean[0]

    def _partials(self, p, pc):
        return self.base._partial_integrals(p, pc, self.utility, self.cfg)

    # Unchecked versions used by the index engine: p may be arbitrarily close to 0 or 1.
    def _lce(self, p, pc=None):
        p = np.asarray(p, dtype=float)
        pc = 1.0 - p if pc is None else np.asarray(pc, dtype=float)
        if np.any(p <= 0):
            raise DomainError("lower conditional expectation needs p > 0")
        return self.base._conditional_means(p, pc, self.utility, self.cfg)[0]

    def _uce(self, p, pc=None):
        p = np.asarray(p, dtype=float)
        pc = 1.0 - p if pc is None else np.asarray(pc, dtype=float)
        if np.any(pc <= 0):
            raise DomainError("upper conditional expectation needs p < 1")
        return self.base._conditional_means(p, pc, self.utility, self.cfg)[1]

    def _both(self, p, pc):
        return self.base._conditional_means(p, pc, self.utility, self.cfg)

    def _risk(self, p, pc=None):
        p = np.asarray(p, dtype=float)
        pc = 1.0 - p if pc is None else np.asarray(pc, dtype=float)
        lo, up = self._both(p, pc)
        if np.any(lo <= 0):
            bad = np.asarray(p)[np.asarray(lo) <= 0] if np.ndim(p) else p
            raise ZeroLowerMean(f"lower conditional expectation vanishes at p = {np.min(bad):.6g}",
                                argument="x")
        with np.errstate(over="ignore"):  # subnormal LCE: R is +inf there
            return up / lo - 1.0

    # -- public, domain-checked ------------------------------------------------------
    def lorenz(self, p, pc=None):
        p, pc = _as_unit(p, pc, open_lo=False, open_hi=False, what="p")
        return self._partials(p, pc)[0] / self.mean

    def bonferroni_curve(self, p, pc=None):
        p, pc = _as_unit(p, pc, what="p")
        return 1.0 - self.lorenz(p, pc) / p

    def lce(self, p, pc=None):
        p, pc = _as_unit(p, pc, open_lo=False, open_hi=False, what="p")
        if np.any(p < LCE_MIN_P):
            raise DomainError(f"lce needs p >= {LCE_MIN_P:g}")
        return self._lce(p, pc)

    def uce(self, p, pc=None):
        p, pc = _as_unit(p, pc, open_lo=False, open_hi=False, what="p")
        if np.any(p > UCE_MAX_P):
            raise DomainError("uce needs p <= 1 - 1e-12")
        return self._uce(p, pc)

    def risk(self, p, pc=None):
        p, pc = _as_unit(p, pc, what="p")
        return self._risk(p, pc)

    def curve_rows(self, p) -> list[dict]:
        """Rows ``(p, L, B, LCE, UCE, R)`` on a grid inside (0, 1)."""
        p = np.asarray(p, dtype=float)
        L = self.lorenz(p)
        lo, up = self._both(p, 1.0 - p)
        with np.errstate(divide="ignore", invalid="ignore"):
            R = np.where(lo > 0, up / np.where(lo > 0, lo, 1.0) - 1.0, np.nan)
        B = 1.0 - L / p
        return [
            {"p": float(a), "L": float(b), "B": float(c), "LCE": float(d), "UCE": float(e),
             "R": float(f) if np.isfinite(f) else None}
            for a, b, c, d, e, f in zip(p, L, B, lo, up, R)
        ]


def _societal(s) -> SocietalFunction:
    return s if isinstance(s, SocietalFunction) else SocietalFunction(s)


def lorenz(s, p):
    return _societal(s).lorenz(p)


def bonferroni_curve(s, p):
    return _societal(s).bonferroni_curve(p)


def lce(s, p):
    return _societal(s).lce(p)


def uce(s, p):
    return _societal(s).uce(p)


def risk_function(s, p):
    return _societal(s).risk(p)
