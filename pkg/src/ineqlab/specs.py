"""Parsers for the compact text specs used on the command line.

    distribution  unif:a,b | exp:rate | pareto:xm,a | lognorm:m,s | point:c
                  | zenga:mu,alpha,theta | csv:PATH
    gamble        beta:a,b | point:p | hgen:poly_alpha=a | hgen:exp_c=c
                  | ggen:pht_alpha=a | ggen:exp_c=c
    v             one_minus_ratio | pow_one_minus_ratio:a | y_over_x
                  | y_over_x_minus_1 | x_over_y_minus_1
    w             identity | atkinson:g | chakravarty:a | root:a | wang:c
    u             identity | power:g | linear:c
"""

from __future__ import annotations

from pathlib import Path

from .distributions import (Distribution, Empirical, Exponential, Lognormal, Pareto, PointMass,
                            Uniform)
from .errors import ConfigError, IneqlabError
from .gambles import (BetaGamble, GGenerated, Gamble, GeneratorFn, HGenerated, PointGamble,
                      exp_g_generator, exp_h_generator, power_generator)
from .value_fns import (AtkinsonW, ChakravartyW, Identity, IdentityU, LinearU, NormalizingFn,
                        OneMinusRatio, PowerOneMinusRatio, PowerU, RatioXYMinusOne, RatioYX,
                        RatioYXMinusOne, RelativeValueFn, RootW, UtilityFn, WangW)
from .zenga import Zenga


def _split(spec: str) -> tuple[str, str]:
    kind, _, rest = spec.strip().partition(":")
    return kind.strip().lower(), rest.strip()


def _numbers(text: str, count: int, spec: str) -> list[float]:
    parts = [p for p in text.split(",")] if text else []
    if len(parts) != count:
        raise ConfigError(f"{spec!r}: expected {count} number(s), got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise ConfigError(f"{spec!r}: could not parse numbers from {text!r}") from None


def _build(spec: str, factory, *args):
    try:
        return factory(*args)
    except IneqlabError as exc:
        raise ConfigError(f"{spec!r}: {exc}") from exc


_DISTS = {
    "unif": (2, Uniform),
    "exp": (1, Exponential),
    "pareto": (2, Pareto),
    "lognorm": (2, Lognormal),
    "point": (1, PointMass),
    "zenga": (3, Zenga),
}


def parse_distribution(spec: str) -> Distribution:
    kind, rest = _split(spec)
    if kind == "csv":
        path = Path(rest)
        if not rest or not path.is_file():
            raise ConfigError(f"{spec!r}: file not found")
        return Empirical.from_csv(path)
    if kind not in _DISTS:
        raise ConfigError(f"unknown distribution {kind!r} in {spec!r}")
    n, factory = _DISTS[kind]
    return _build(spec, factory, *_numbers(rest, n, spec))


def _keyed(rest: str, spec: str) -> tuple[str, float]:
    key, eq, val = rest.partition("=")
    if not eq:
        raise ConfigError(f"{spec!r}: expected key=value")
    try:
        return key.strip(), float(val)
    except ValueError:
        raise ConfigError(f"{spec!r}: {val!r} is not a number") from None


def parse_generator(spec: str) -> tuple[str, GeneratorFn]:
    """Return the class ('H' or 'G') and the generator of an hgen/ggen spec."""
    kind, rest = _split(spec)
    key, val = _keyed(rest, spec)
    if kind == "hgen" and key == "poly_alpha":
        return "H", _build(spec, power_generator, val)
    if kind == "hgen" and key == "exp_c":
        return "H", _build(spec, exp_h_generator, val)
    if kind == "ggen" and key == "pht_alpha":
        return "G", _build(spec, power_generator, val)
    if kind == "ggen" and key == "exp_c":
        return "G", _build(spec, exp_g_generator, val)
    raise ConfigError(f"unknown generator spec {spec!r}")


def parse_gamble(spec: str) -> Gamble:
    kind, rest = _split(spec)
    if kind == "beta":
        return _build(spec, BetaGamble, *_numbers(rest, 2, spec))
    if kind == "point":
        return _build(spec, PointGamble, *_numbers(rest, 1, spec))
    if kind in ("hgen", "ggen"):
        cls, gen = parse_generator(spec)
        return _build(spec, HGenerated if cls == "H" else GGenerated, gen)
    raise ConfigError(f"unknown gamble spec {spec!r}")


def parse_v(spec: str) -> RelativeValueFn:
    kind, rest = _split(spec)
    simple = {"one_minus_ratio": OneMinusRatio, "y_over_x": RatioYX,
              "y_over_x_minus_1": RatioYXMinusOne, "x_over_y_minus_1": RatioXYMinusOne}
    if kind in simple and not rest:
        return simple[kind]()
    if kind == "pow_one_minus_ratio":
        return _build(spec, PowerOneMinusRatio, *_numbers(rest, 1, spec))
    raise ConfigError(f"unknown relative-value spec {spec!r}")


def parse_w(spec: str) -> NormalizingFn:
    kind, rest = _split(spec)
    if kind == "identity" and not rest:
        return Identity()
    table = {"atkinson": AtkinsonW, "chakravarty": ChakravartyW, "root": RootW, "wang": WangW}
    if kind in table:
        return _build(spec, table[kind], *_numbers(rest, 1, spec))
    raise ConfigError(f"unknown normalizing spec {spec!r}")


def parse_u(spec: str) -> UtilityFn:
    kind, rest = _split(spec)
    if kind == "identity" and not rest:
        return IdentityU()
    if kind == "power":
        return _build(spec, PowerU, *_numbers(rest, 1, spec))
    if kind == "linear":
        return _build(spec, LinearU, *_numbers(rest, 1, spec))
    raise ConfigError(f"unknown utility spec {spec!r}")
