"""Pairwise ordering tests: Lorenz, R-ordering, Pigou-Dalton and density sign patterns.

Orders are tested on a grid.  ``X_dominates`` means ``X <= Y`` in the order
under test, i.e. X is the less unequal (less risky) member: its Lorenz curve
lies on or above that of Y, or its risk function on or below.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .distributions import Distribution
from .errors import NoDensity
from .societal import SocietalFunction

DEFAULT_GRID = 2001
GRID_LO, GRID_HI = 1e-3, 1.0 - 1e-3
TOL = 1e-9


def chebyshev_grid(n: int = DEFAULT_GRID, lo: float = GRID_LO, hi: float = GRID_HI) -> np.ndarray:
    """Chebyshev-Lobatto points on [lo, hi]; they crowd towards both ends."""
    if n < 2:
        return np.array([0.5 * (lo + hi)])
    k = np.arange(n)
    x = 0.5 * (1.0 - np.cos(math.pi * k / (n - 1)))
    return lo + (hi - lo) * x


@dataclass
class OrderingReport:
    relation: str
    max_violation: float
    violation_points: list
    grid_size: int
    order: str = "lorenz"
    mean_gap: float | None = None
    holds: bool | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _classify(diff: np.ndarray, p: np.ndarray, tol: np.ndarray | float, order: str) -> OrderingReport:
    """Classify ``diff``, positive where X is 'better' (X <= Y direction)."""
    tol = np.broadcast_to(np.asarray(tol, dtype=float), diff.shape)
    x_viol = -diff  # > 0 where X <= Y fails
    y_viol = diff   # > 0 where Y <= X fails
    x_bad = x_viol > tol
    y_bad = y_viol > tol
    n = int(diff.size)
    if not x_bad.any() and not y_bad.any() and np.max(np.abs(diff)) < np.max(tol):
        rel, viol, pts = "indistinguishable", float(np.max(np.abs(diff))), []
    elif not x_bad.any():
        rel, viol, pts = "X_dominates", float(max(np.max(x_viol), 0.0)), []
    elif not y_bad.any():
        rel, viol, pts = "Y_dominates", float(max(np.max(y_viol), 0.0)), []
    else:
        rel = "crossing"
        viol = float(min(np.max(x_viol), np.max(y_viol)))
        pts = [float(v) for v in p[x_bad]]
    return OrderingReport(rel, viol, pts, n, order)


def lorenz_order(x: Distribution, y: Distribution, grid: int = DEFAULT_GRID, cfg=None,
                 tol: float = TOL) -> OrderingReport:
    """Test ``L_X(p) >= L_Y(p)`` (X <= Y in the Lorenz order) on the grid."""
    p = chebyshev_grid(grid)
    diff = SocietalFunction(x, cfg=cfg).lorenz(p) - SocietalFunction(y, cfg=cfg).lorenz(p)
    return _classify(diff, p, tol, "lorenz")


def r_order(x: Distribution, y: Distribution, grid: int = DEFAULT_GRID, cfg=None,
            tol: float = TOL) -> OrderingReport:
    """Test ``R_X(p) <= R_Y(p)`` on the grid, with tolerance scaled by the size of R."""
    p = chebyshev_grid(grid)
    rx = SocietalFunction(x, cfg=cfg).risk(p)
    ry = SocietalFunction(y, cfg=cfg).risk(p)
    return _classify(ry - rx, p, tol * np.maximum(1.0, np.maximum(np.abs(rx), np.abs(ry))), "r")


def pigou_dalton_order(x: Distribution, y: Distribution, grid: int = DEFAULT_GRID, cfg=None,
                       tol: float = TOL, mean_tol: float = 1e-8) -> OrderingReport:
    """``X <=_PD Y``: equal means and Lorenz dominance of X over Y."""
    rep = lorenz_order(x, y, grid, cfg, tol)
    gap = abs(x.mean - y.mean)
    rep.order = "pd"
    rep.mean_gap = gap
    rep.holds = bool(gap <= mean_tol * max(abs(x.mean), abs(y.mean))
                     and rep.relation in ("X_dominates", "indistinguishable"))
    return rep


@dataclass
class SignPatternReport:
    pattern: str
    sign_changes: int
    is_plus_minus_plus: bool
    implies: str | None
    lorenz_relation: str | None
    lorenz_consistent: bool | None
    resolution_warning: bool
    grid_size: int
    x_range: tuple = field(default=(0.0, 0.0))

    def to_dict(self) -> dict:
        return asdict(self)


def _pattern(diff: np.ndarray, band: float) -> str:
    signs = np.sign(diff[np.abs(diff) >= band])
    if signs.size == 0:
        return ""
    keep = np.r_[True, signs[1:] != signs[:-1]]
    return "".join("+" if s > 0 else "-" for s in signs[keep])


def sign_pattern_check(x: Distribution, y: Distribution, grid: int = DEFAULT_GRID, cfg=None,
                       band: float = 1e-12, mean_tol: float = 1e-8) -> SignPatternReport:
    """Sign pattern of ``f_X - f_Y`` between the 1e-4 and 1 - 1e-4 quantiles.

    With equal means, two sign changes ordered (-, +, -) put X's mass in the
    middle relative to Y, so ``X <= Y`` in the Lorenz order; (+, -, +) gives
    the reverse.  When either pattern occurs with equal means the implied
    relation is compared with :func:`lorenz_order`.  A 4x refined grid is
    also scanned; a different pattern there raises the resolution warning.
    """
    for d in (x, y):
        if not d.has_density:
            raise NoDensity(f"{d!r} has no density; the sign pattern is undefined")
    q_lo = np.array([1e-4])
    q_hi = np.array([1.0 - 1e-4])
    lo = float(min(x.quantile(q_lo)[0], y.quantile(q_lo)[0]))
    hi = float(max(x.quantile(q_hi)[0], y.quantile(q_hi)[0]))

    def scan(n):
        xs = np.geomspace(lo, hi, n) if lo > 0 else np.linspace(lo, hi, n)
        return _pattern(x.pdf(xs) - y.pdf(xs), band)

    pattern = scan(grid)
    refined = scan(4 * grid - 3)
    equal_means = abs(x.mean - y.mean) <= mean_tol * max(abs(x.mean), abs(y.mean))
    implies = None
    if equal_means and pattern == "-+-":
        implies = "X_dominates"
    elif equal_means and pattern == "+-+":
        implies = "Y_dominates"
    lorenz_relation = consistent = None
    if implies is not None:
        lorenz_relation = lorenz_order(x, y, cfg=cfg).relation
        consistent = lorenz_relation == implies
    return SignPatternReport(pattern, max(len(pattern) - 1, 0), pattern == "+-+", implies,
                             lorenz_relation, consistent, refined != pattern, grid, (lo, hi))
