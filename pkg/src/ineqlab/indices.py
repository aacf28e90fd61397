"""The general index and dedicated implementations of the classical indices.

The general index is

    E_F = w( E[ v( LCE_{F,u}(pi), UCE_{F,u*}(pi*) ) ] )

for a pair of gambles (pi, pi*).  Each named index below is computed through
routes that avoid the engine where possible (survival-function integrals,
quantile-weighted integrals, moments) and, when it has several equivalent
forms, evaluates all of them and raises :class:`FormMismatch` if they
disagree.  :func:`table1_crosscheck` compares every named index with its
row of the general index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from .distributions import Distribution, Empirical, _neg_log1m_integral
from .errors import (DomainError, FormMismatch, IneqlabError, InfiniteRiskMeasure,
                     ZeroLowerMean)
from .gambles import (BetaGamble, GamblePair, Gamble, GeneratorFn, GGenerated, HGenerated,
                      PointGamble, exp_g_generator, exp_h_generator, require_generator,
                      validate_generator)
from .quadrature import IntegrationResult, QuadratureConfig, integrate_unit
from .societal import SocietalFunction
from .value_fns import (AtkinsonW, ChakravartyW, Identity, LinearU, NormalizingFn, OneMinusRatio,
                        PowerOneMinusRatio, PowerU, RatioYX, RatioYXMinusOne, RelativeValueFn,
                        RootW, UtilityFn, WangW)
from .zenga import Zenga

_MAX_BREAKS = 256


@dataclass(frozen=True, eq=False)
class IndexSpec:
    pair: GamblePair
    v: RelativeValueFn
    w: NormalizingFn = field(default_factory=Identity)
    u: UtilityFn | None = None
    u_star: UtilityFn | None = None
    label: str = "custom"


@dataclass
class IndexResult:
    value: float
    spec_label: str
    diagnostics: dict = field(default_factory=dict)
    form_values: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "index": self.spec_label,
            "params": self.params,
            "value": self.value,
            "form_values": self.form_values,
            "error_estimates": self.diagnostics,
        }


def _breaks(d: Distribution) -> tuple:
    b = d.t_breaks
    return b if len(b) <= _MAX_BREAKS else ()


def general_index(spec: IndexSpec, d: Distribution, cfg: QuadratureConfig | None = None) -> IndexResult:
    """Evaluate the general index for one configuration.

    Atoms are used exactly: a first gamble at 1 gives ``LCE(1) = E[u(X)]``
    and a second gamble at 0 gives ``UCE(0) = E[u*(X)]``.
    """
    low = SocietalFunction(d, spec.u, cfg)
    same_u = (spec.u is None and spec.u_star is None) or spec.u == spec.u_star
    high = low if same_u else SocietalFunction(d, spec.u_star, cfg)
    identical = spec.pair.kind == "identical"

    def psi(p, pc, q, qc):
        if identical and high is low:
            x, y = low._both(p, pc)
        else:
            x, y = low._lce(p, pc), high._uce(q, qc)
        return spec.v(x, y)

    res = spec.pair.integrate(psi, cfg, _breaks(d), complement=True)
    value = float(spec.w(res.value, mean=d.mean))
    if not math.isfinite(value):
        raise DomainError(f"{spec.label}: index value is not finite")
    return IndexResult(value, spec.label,
                       {"expectation": res.abs_error_estimate},
                       {"expectation": res.value})


# -- helpers -------------------------------------------------------------------------
def _values(forms: dict) -> dict:
    return {k: float(v.value if isinstance(v, IntegrationResult) else v) for k, v in forms.items()}


def _errors(forms: dict) -> dict:
    return {k: v.abs_error_estimate for k, v in forms.items() if isinstance(v, IntegrationResult)}


def _check_forms(name: str, forms: dict, tol: float, relative: bool = False) -> dict:
    """Raise FormMismatch unless all forms agree; return the plain values."""
    forms = _values(forms)
    for (ka, a), (kb, b) in combinations(forms.items(), 2):
        scale = max(1.0, abs(a), abs(b)) if relative else 1.0
        if not abs(a - b) <= tol * scale:
            raise FormMismatch(f"{name}: forms {ka}={a!r} and {kb}={b!r} differ by {abs(a - b):.3g}",
                               forms=dict(forms))
    return forms


def _lower_ratio(d: Distribution, cfg):
    """``t -> L(t)`` as a complement-aware integrand helper."""
    mu = d.mean

    def L(t, tc):
        return d._partial_integrals(t, tc, None, cfg)[0] / mu

    return L


def _distortion(d: Distribution, h: Callable, cfg) -> float:
    return d.distortion_integral(h, cfg)


def _positive_mean(d: Distribution) -> float:
    mu = d.mean
    if not mu > 0:
        raise ZeroLowerMean("the mean must be positive for a relative index", argument="y")
    return mu


# -- Gini ----------------------------------------------------------------------------
def gini_forms(d: Distribution, cfg=None) -> dict:
    mu = _positive_mean(d)
    L = _lower_ratio(d, cfg)
    pts = _breaks(d)
    a = BetaGamble(1, 1).integrate(lambda t, tc: t - L(t, tc), cfg, pts, True)
    absolute = IntegrationResult(2.0 * a.value, 2.0 * a.abs_error_estimate, a.subdivisions)
    relative = BetaGamble(2, 1).integrate(lambda t, tc: 1.0 - L(t, tc) / t, cfg, pts, True)
    survival = 1.0 - _distortion(d, lambda s: s * s, cfg) / mu
    return {"absolute": absolute, "relative": relative, "survival": survival}


def gini(d: Distribution, cfg=None, form_tol: float = 1e-6) -> float:
    """Gini index; the absolute and relative Lorenz forms and the survival form must agree."""
    return _check_forms("gini", gini_forms(d, cfg), form_tol)["absolute"]


# -- Bonferroni ----------------------------------------------------------------------
def _bonferroni_h(s):
    s = np.asarray(s, dtype=float)
    out = np.ones_like(s)
    inner = s < 1.0
    # s + (1 - s) log(1 - s) = int_0^s -log(1 - r) dr
    out[inner] = _neg_log1m_integral(s[inner])
    return out


def bonferroni_forms(d: Distribution, cfg=None) -> dict:
    mu = _positive_mean(d)
    L = _lower_ratio(d, cfg)
    curve = BetaGamble(1, 1).integrate(lambda t, tc: 1.0 - L(t, tc) / t, cfg, _breaks(d), True)
    survival = 1.0 - _distortion(d, _bonferroni_h, cfg) / mu
    return {"curve": curve, "survival": survival}


def bonferroni_index(d: Distribution, cfg=None, form_tol: float = 1e-7) -> float:
    return _check_forms("bonferroni", bonferroni_forms(d, cfg), form_tol)["curve"]


# -- Chakravarty ---------------------------------------------------------------------
def _chakravarty_integral(d: Distribution, alpha: float, cfg) -> float:
    """``int_0^1 (t - L(t))**alpha dt``."""
    L = _lower_ratio(d, cfg)
    return integrate_unit(lambda t, tc: np.maximum(t - L(t, tc), 0.0) ** alpha,
                          cfg, _breaks(d), complement=True).value


def chakravarty(d: Distribution, alpha: float = 2.0, cfg=None, form_tol: float = 1e-8,
                check_table: bool = True) -> float:
    if not alpha >= 1:
        raise DomainError("chakravarty needs alpha >= 1")
    _positive_mean(d)
    value = 2.0 * _chakravarty_integral(d, alpha, cfg) ** (1.0 / alpha)
    if check_table:
        row = general_index(table1_spec("chakravarty", alpha=alpha), d, cfg).value
        _check_forms("chakravarty", {"direct": value, "general": row}, form_tol)
    return value


def chakravarty_tilde(d: Distribution, alpha: float = 2.0, cfg=None) -> float:
    """Root form ``((alpha + 1) int (t - L(t))**alpha dt)**(1/alpha)``."""
    if not alpha >= 1:
        raise DomainError("chakravarty_tilde needs alpha >= 1")
    _positive_mean(d)
    return ((alpha + 1.0) * _chakravarty_integral(d, alpha, cfg)) ** (1.0 / alpha)


# -- Atkinson ------------------------------------------------------------------------
def atkinson(d: Distribution, gamma: float = 0.5, cfg=None, form_tol: float = 1e-8,
             check_table: bool = True) -> float:
    if not 0 < gamma < 1:
        raise DomainError("atkinson needs gamma in (0, 1)")
    mu = _positive_mean(d)
    value = 1.0 - d.power_moment(gamma, cfg) ** (1.0 / gamma) / mu
    if check_table:
        row = general_index(table1_spec("atkinson", gamma=gamma, mean=mu), d, cfg).value
        _check_forms("atkinson", {"moment": value, "general": row}, form_tol)
    return value


# -- Palma ---------------------------------------------------------------------------
def palma(d: Distribution, cfg=None, form_tol: float = 1e-9, check_table: bool = True) -> float:
    """Mean of the top 10% over the mean of the bottom 40%."""
    top = float(d.upper_integral(0.9, cfg=cfg)) / 0.1
    bottom = float(d.lower_integral(0.4, cfg=cfg)) / 0.4
    if not bottom > 0:
        raise ZeroLowerMean("bottom-40% mean is zero", argument="x")
    value = top / bottom
    if check_table:
        row = general_index(table1_spec("palma"), d, cfg).value
        _check_forms("palma", {"direct": value, "general": row}, form_tol, relative=True)
    return value


# -- DWK -----------------------------------------------------------------------------
def dwk_forms(d: Distribution, alpha: float, cfg=None) -> dict:
    if not alpha > 1:
        raise DomainError("dwk needs alpha > 1")
    mu = _positive_mean(d)
    a = float(alpha)
    survival = 1.0 - _distortion(d, lambda s: s**a, cfg) / mu
    quantile = 1.0 - d.quantile_distortion_integral(lambda s: s**a, lambda s: a * s ** (a - 1.0), cfg) / mu
    L = _lower_ratio(d, cfg)
    gamble = BetaGamble(2.0, a - 1.0).integrate(lambda t, tc: 1.0 - L(t, tc) / t, cfg, _breaks(d), True)
    return {"survival": survival, "quantile": quantile, "gamble": gamble}


def dwk(d: Distribution, alpha: float = 3.0, cfg=None, form_tol: float = 1e-7) -> float:
    return _check_forms("dwk", dwk_forms(d, alpha, cfg), form_tol)["survival"]


def dwk_h_forms(d: Distribution, h: GeneratorFn, cfg=None) -> dict:
    require_generator(h, "H")
    mu = _positive_mean(d)
    k = 1.0 / (1.0 - h.slope_at_0)
    survival = k * (1.0 - _distortion(d, h, cfg) / mu)
    quantile = k * (1.0 - d.quantile_distortion_integral(h, h.deriv1, cfg) / mu)
    L = _lower_ratio(d, cfg)
    gamble = HGenerated(h, validate=False).integrate(lambda t, tc: 1.0 - L(t, tc) / t, cfg, _breaks(d), True)
    return {"survival": survival, "quantile": quantile, "gamble": gamble}


def dwk_h(d: Distribution, h: GeneratorFn, cfg=None, form_tol: float = 1e-7) -> float:
    return _check_forms("dwk_h", dwk_h_forms(d, h, cfg), form_tol)["survival"]


# -- Wang and PHT --------------------------------------------------------------------
def _uce_gamble_term(d: Distribution, gamble: Gamble, cfg) -> float:
    """``E[UCE(pi) / mu - 1]``."""
    mu = d.mean

    def f(t, tc):
        return d._partial_integrals(t, tc, None, cfg)[1] / (tc * mu) - 1.0

    return gamble.expect(f, cfg, _breaks(d), True)


def _distortion_order(g: GeneratorFn) -> float:
    """Exponent k with ``g(s) ~ s**k`` as s -> 0, read off two small arguments."""
    s = np.array([1e-12, 1e-11])
    v = g(s)
    if np.any(v <= 0):
        return math.inf
    return float(np.log(v[1] / v[0]) / np.log(10.0))


def wang_forms(d: Distribution, g: GeneratorFn, cfg=None) -> dict:
    mu = _positive_mean(d)
    k = _distortion_order(g)
    # g(S(x)) ~ x**-(k * tail_index) has a finite integral only above one
    if k * d.tail_index <= 1 + 1e-6:
        raise InfiniteRiskMeasure(
            f"wang with {g.name} (order {k:.4g} at 0) diverges for a tail index of {d.tail_index}")
    forms = {"direct": _distortion(d, g, cfg)}
    if validate_generator(g, "G").valid:
        slope = g.slope_at_1
        forms["quantile"] = d.quantile_distortion_integral(g, g.deriv1, cfg)
        term = _uce_gamble_term(d, GGenerated(g, validate=False), cfg)
        forms["reconstruction"] = mu * (term * (1.0 - slope) + 1.0)
    return forms


def wang(d: Distribution, g: GeneratorFn, cfg=None, form_tol: float = 1e-7) -> float:
    """Distortion risk measure ``int_0^inf g(1 - F(x)) dx``.

    For a class (G) generator the gamble reconstruction is checked as well.
    """
    return _check_forms("wang", wang_forms(d, g, cfg), form_tol, relative=True)["direct"]


def _pht_check(d: Distribution, alpha: float) -> None:
    if not 0 < alpha < 1:
        raise DomainError("pht needs alpha in (0, 1)")
    if not alpha * d.tail_index > 1:
        raise InfiniteRiskMeasure(
            f"pht with alpha={alpha} diverges for a tail index of {d.tail_index}")


def pht_forms(d: Distribution, alpha: float, cfg=None) -> dict:
    _pht_check(d, alpha)
    mu = _positive_mean(d)
    a = float(alpha)
    direct = _distortion(d, lambda s: s**a, cfg)
    term = _uce_gamble_term(d, BetaGamble(1.0, a), cfg)
    return {"direct": direct, "reconstruction": mu * (term * (1.0 - a) + 1.0)}


def pht(d: Distribution, alpha: float = 0.5, cfg=None, form_tol: float = 1e-7) -> float:
    return _check_forms("pht", pht_forms(d, alpha, cfg), form_tol, relative=True)["direct"]


# -- Zenga index and relative risk -----------------------------------------------------
def zenga_index(d: Distribution, cfg=None) -> float:
    """``int_0^1 (1 - LCE(p) / UCE(p)) dp`` from the two conditional means."""
    _positive_mean(d)

    def f(t, tc):
        lo, up = d._conditional_means(t, tc, None, cfg)
        return 1.0 - lo / up

    return integrate_unit(f, cfg, _breaks(d), complement=True).value


def relative_risk_forms(d: Distribution, gamble: Gamble, cfg=None) -> dict:
    s = SocietalFunction(d, cfg=cfg)
    mu = s.mean

    def ratio(t, tc):
        return s._risk(t, tc)

    def lorenz_display(t, tc):
        L = d._partial_integrals(t, tc, None, cfg)[0] / mu
        if np.any(L <= 0):
            raise ZeroLowerMean("Lorenz curve vanishes inside the gamble's support", argument="x")
        return t / (tc * L) - t / tc - 1.0

    pts = _breaks(d)
    return {"ratio": gamble.integrate(ratio, cfg, pts, True),
            "lorenz": gamble.integrate(lorenz_display, cfg, pts, True)}


def relative_risk(d: Distribution, gamble: Gamble, cfg=None, form_tol: float = 1e-7) -> float:
    """``E[UCE(pi) / LCE(pi) - 1]`` for an explicitly given gamble."""
    if gamble is None:
        raise DomainError("relative_risk needs an explicit gamble")
    return _check_forms("relative_risk", relative_risk_forms(d, gamble, cfg), form_tol,
                        relative=True)["ratio"]


# -- general-index rows --------------------------------------------------------------
def table1_spec(name: str, *, gamma: float = 0.5, alpha: float = 2.0, h: GeneratorFn | None = None,
                g: GeneratorFn | None = None, gamble: Gamble | None = None,
                mean: float | None = None) -> IndexSpec:
    """The general-index configuration of a named index.

    ``alpha`` is the Chakravarty, DWK or PHT exponent as appropriate.  The
    Atkinson row needs the law's mean: its second utility is ``mu**(gamma-1) x``
    so that the reference ``UCE(0)`` equals ``mu**gamma``.
    """
    zero, one = PointGamble(0.0), PointGamble(1.0)
    lower_only = lambda pi: GamblePair(pi, zero)
    if name == "atkinson":
        if mean is None:
            raise DomainError("the atkinson row needs the mean of the law")
        return IndexSpec(GamblePair(one, zero), OneMinusRatio(), AtkinsonW(gamma),
                         PowerU(gamma), LinearU(mean ** (gamma - 1.0)), "atkinson")
    if name == "bonferroni":
        return IndexSpec(lower_only(BetaGamble(1, 1)), OneMinusRatio(), label="bonferroni")
    if name == "chakravarty":
        return IndexSpec(lower_only(BetaGamble(alpha + 1, 1)), PowerOneMinusRatio(alpha),
                         ChakravartyW(alpha), label="chakravarty")
    if name == "chakravarty_tilde":
        return IndexSpec(lower_only(BetaGamble(alpha + 1, 1)), PowerOneMinusRatio(alpha),
                         RootW(alpha), label="chakravarty_tilde")
    if name == "dwk":
        return IndexSpec(lower_only(BetaGamble(2, alpha - 1)), OneMinusRatio(), label="dwk")
    if name == "dwk_h":
        h = h or exp_h_generator(2.0)
        return IndexSpec(lower_only(HGenerated(h)), OneMinusRatio(), label="dwk_h")
    if name == "gini":
        return IndexSpec(lower_only(BetaGamble(2, 1)), OneMinusRatio(), label="gini")
    if name == "palma":
        return IndexSpec(GamblePair(PointGamble(0.4), PointGamble(0.9)), RatioYX(), label="palma")
    if name == "risk":
        if gamble is None:
            raise DomainError("the risk row needs an explicit gamble")
        return IndexSpec(GamblePair.same(gamble), RatioYXMinusOne(), label="risk")
    if name == "wang":
        g = g or exp_g_generator(2.0)
        return IndexSpec(GamblePair(one, GGenerated(g)), RatioYXMinusOne(),
                         WangW(1.0 - g.slope_at_1), label="wang")
    if name == "pht":
        return IndexSpec(GamblePair(one, BetaGamble(1, alpha)), RatioYXMinusOne(),
                         WangW(1.0 - alpha), label="pht")
    if name == "zenga":
        return IndexSpec(GamblePair.same(BetaGamble(1, 1)), OneMinusRatio(), label="zenga")
    raise DomainError(f"unknown index {name!r}")


@dataclass(frozen=True)
class Table1Params:
    atkinson_gamma: float = 0.5
    chakravarty_alpha: float = 2.0
    dwk_alpha: float = 3.0
    h: GeneratorFn = field(default_factory=lambda: exp_h_generator(2.0))
    g: GeneratorFn = field(default_factory=lambda: exp_g_generator(2.0))
    pht_alpha: float = 0.5
    risk_gamble: Gamble = field(default_factory=lambda: BetaGamble(2.0, 1.0))


@dataclass
class Table1Row:
    label: str
    engine: float | None
    closed_form: float | None
    abs_diff: float | None
    status: str  # pass | fail | n/a | error
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "n/a")

    def to_dict(self) -> dict:
        return {"row": self.label, "engine": self.engine, "closed_form": self.closed_form,
                "abs_diff": self.abs_diff, "status": self.status, "message": self.message}


TABLE1_ROWS = ("atkinson", "bonferroni", "chakravarty", "chakravarty_tilde", "dwk", "dwk_h",
               "gini", "palma", "risk", "wang", "pht", "zenga")

# Raised when a row does not apply to the law (e.g. a divergent risk measure).
_NOT_APPLICABLE = (InfiniteRiskMeasure, ZeroLowerMean)


def _table1_pair(label: str, d: Distribution, p: Table1Params, cfg):
    mu = d.mean
    if label == "atkinson":
        spec = table1_spec(label, gamma=p.atkinson_gamma, mean=mu)
        return spec, lambda: atkinson(d, p.atkinson_gamma, cfg, check_table=False)
    if label == "bonferroni":
        return table1_spec(label), lambda: bonferroni_index(d, cfg)
    if label == "chakravarty":
        return (table1_spec(label, alpha=p.chakravarty_alpha),
                lambda: chakravarty(d, p.chakravarty_alpha, cfg, check_table=False))
    if label == "chakravarty_tilde":
        return (table1_spec(label, alpha=p.chakravarty_alpha),
                lambda: chakravarty_tilde(d, p.chakravarty_alpha, cfg))
    if label == "dwk":
        return table1_spec(label, alpha=p.dwk_alpha), lambda: dwk(d, p.dwk_alpha, cfg)
    if label == "dwk_h":
        return table1_spec(label, h=p.h), lambda: dwk_h(d, p.h, cfg)
    if label == "gini":
        return table1_spec(label), lambda: gini(d, cfg)
    if label == "palma":
        return table1_spec(label), lambda: palma(d, cfg, check_table=False)
    if label == "risk":
        return table1_spec(label, gamble=p.risk_gamble), lambda: relative_risk(d, p.risk_gamble, cfg)
    if label == "wang":
        return table1_spec(label, g=p.g), lambda: wang(d, p.g, cfg)
    if label == "pht":
        _pht_check(d, p.pht_alpha)
        return table1_spec(label, alpha=p.pht_alpha), lambda: pht(d, p.pht_alpha, cfg)
    if label == "zenga":
        return table1_spec(label), lambda: zenga_index(d, cfg)
    raise DomainError(label)


def default_tolerance(d: Distribution) -> float:
    return 1e-4 if isinstance(d, Zenga) else 1e-6


def table1_crosscheck(d: Distribution, params: Table1Params | None = None,
                      tol: float | None = None, cfg=None) -> list[Table1Row]:
    """Compare each row of the general index with its dedicated implementation.

    Rows that raise are reported (``n/a`` when the index does not exist for
    the law, ``error`` otherwise) rather than aborting the run.
    """
    params = params or Table1Params()
    tol = default_tolerance(d) if tol is None else tol
    rows = []
    for label in TABLE1_ROWS:
        try:
            spec, dedicated = _table1_pair(label, d, params, cfg)
            engine = general_index(spec, d, cfg).value
            closed = float(dedicated())
        except _NOT_APPLICABLE as exc:
            rows.append(Table1Row(label, None, None, None, "n/a", f"{type(exc).__name__}: {exc}"))
            continue
        except IneqlabError as exc:
            rows.append(Table1Row(label, None, None, None, "error", f"{type(exc).__name__}: {exc}"))
            continue
        diff = abs(engine - closed)
        rows.append(Table1Row(label, engine, closed, diff, "pass" if diff <= tol else "fail"))
    return rows


# -- registry used by the command line ------------------------------------------------
def _general_form(spec: IndexSpec, d: Distribution, cfg) -> IntegrationResult:
    res = general_index(spec, d, cfg)
    return IntegrationResult(res.value, res.diagnostics["expectation"], 1)


def index_result(name: str, d: Distribution, params: dict | None = None, cfg=None) -> IndexResult:
    """Compute a named index with all its forms, for serialization.

    Objects that cannot be serialized are passed in ``params`` under keys
    ending in ``_fn`` (generators) or ``_obj`` (gambles, specs).
    """
    params = dict(params or {})
    relative = False
    if name == "gini":
        forms, tol, primary = gini_forms(d, cfg), 1e-6, "absolute"
    elif name == "bonferroni":
        forms, tol, primary = bonferroni_forms(d, cfg), 1e-7, "curve"
    elif name in ("chakravarty", "chakravarty_tilde"):
        a = float(params.setdefault("alpha", 2.0))
        direct = (chakravarty(d, a, cfg, check_table=False) if name == "chakravarty"
                  else chakravarty_tilde(d, a, cfg))
        forms = {"direct": direct, "general": _general_form(table1_spec(name, alpha=a), d, cfg)}
        tol, primary = 1e-8, "direct"
    elif name == "atkinson":
        gm = float(params.setdefault("gamma", 0.5))
        forms = {"moment": atkinson(d, gm, cfg, check_table=False),
                 "general": _general_form(table1_spec(name, gamma=gm, mean=d.mean), d, cfg)}
        tol, primary = 1e-8, "moment"
    elif name == "palma":
        forms = {"direct": palma(d, cfg, check_table=False),
                 "general": _general_form(table1_spec(name), d, cfg)}
        tol, primary, relative = 1e-9, "direct", True
    elif name == "dwk":
        forms = dwk_forms(d, float(params.setdefault("alpha", 3.0)), cfg)
        tol, primary = 1e-7, "survival"
    elif name == "dwk_h":
        forms, tol, primary = dwk_h_forms(d, params.pop("h_fn"), cfg), 1e-7, "survival"
    elif name == "wang":
        forms, tol, primary = wang_forms(d, params.pop("g_fn"), cfg), 1e-7, "direct"
        relative = True
    elif name == "pht":
        forms = pht_forms(d, float(params.setdefault("alpha", 0.5)), cfg)
        tol, primary, relative = 1e-7, "direct", True
    elif name == "zenga":
        forms = {"direct": zenga_index(d, cfg), "general": _general_form(table1_spec(name), d, cfg)}
        tol, primary = 1e-7, "direct"
    elif name == "risk":
        gamble = params.pop("gamble_obj", None)
        if gamble is None:
            raise DomainError("the risk index needs an explicit gamble")
        forms, tol, primary = relative_risk_forms(d, gamble, cfg), 1e-7, "ratio"
        relative = True
    elif name == "general":
        res = general_index(params.pop("spec_obj"), d, cfg)
        res.params = params
        return res
    else:
        raise DomainError(f"unknown index {name!r}")
    values = _check_forms(name, forms, tol, relative)
    return IndexResult(values[primary], name, _errors(forms), values, params)


INDEX_NAMES = ("gini", "bonferroni", "chakravarty", "chakravarty_tilde", "atkinson", "palma", "dwk",
               "dwk_h", "wang", "pht", "zenga", "risk", "general")
