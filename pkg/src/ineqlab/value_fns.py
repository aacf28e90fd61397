"""Relative-value functions v(x, y), normalizing functions w and utilities u.

These are the three function families that parameterize the general index.
All evaluators are vectorized over numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigError, DivisionByZero, DomainError


def _check_nonzero(arr, argument, name):
    if np.any(arr == 0):
        raise DivisionByZero(f"{name}: argument {argument} is zero", argument=argument)


# -- relative-value functions -------------------------------------------------------
class RelativeValueFn:
    """Comparison ``v(x, y)`` of an achieved value x against a reference y."""

    name: str = "v"

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return self._eval(x, y)

    def _eval(self, x, y):
        raise NotImplementedError

    def __str__(self):
        return self.name


def _ratio(x, y, name):
    _check_nonzero(y, "y", name)
    return x / y


@dataclass(frozen=True)
class OneMinusRatio(RelativeValueFn):
    name: str = field(default="one_minus_ratio", init=False)

    def _eval(self, x, y):
        return 1.0 - _ratio(x, y, self.name)


@dataclass(frozen=True)
class PowerOneMinusRatio(RelativeValueFn):
    alpha: float = 2.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("pow_one_minus_ratio needs a positive exponent")

    @property
    def name(self):
        return f"pow_one_minus_ratio:{self.alpha:g}"

    def _eval(self, x, y):
        base = 1.0 - _ratio(x, y, self.name)
        if float(self.alpha).is_integer():
            return base**self.alpha
        # x slightly above y by rounding; larger excursions are a genuine domain error
        if np.any(base < -1e-12):
            raise DomainError(f"{self.name}: x > y gives a negative base for a fractional power")
        return np.maximum(base, 0.0) ** self.alpha


@dataclass(frozen=True)
class RatioYX(RelativeValueFn):
    name: str = field(default="y_over_x", init=False)

    def _eval(self, x, y):
        _check_nonzero(x, "x", self.name)
        return y / x


@dataclass(frozen=True)
class RatioYXMinusOne(RelativeValueFn):
    name: str = field(default="y_over_x_minus_1", init=False)

    def _eval(self, x, y):
        _check_nonzero(x, "x", self.name)
        return y / x - 1.0


@dataclass(frozen=True)
class RatioXYMinusOne(RelativeValueFn):
    name: str = field(default="x_over_y_minus_1", init=False)

    def _eval(self, x, y):
        return _ratio(x, y, self.name) - 1.0


@dataclass(frozen=True)
class LForm(RelativeValueFn):
    """``v(x, y) = ell(x / y)`` for a user-supplied ``ell``."""

    ell: Callable = lambda r: 1.0 - r
    name: str = "lform"

    def _eval(self, x, y):
        return np.asarray(self.ell(_ratio(x, y, self.name)), dtype=float)


def eval_v(v: RelativeValueFn, x, y):
    return v(x, y)


@dataclass(frozen=True)
class HomogeneityReport:
    samples: int
    failures: list
    max_deviation: float

    @property
    def ok(self) -> bool:
        return not self.failures


def homogeneity_check(v: RelativeValueFn, samples: int = 1000, seed: int = 0,
                      tol: float = 1e-10) -> HomogeneityReport:
    """Test ``v(lam x, lam y) == v(x, y)`` on random triples with ``x <= y``.

    x and y are drawn log-uniformly from [0.1, 10] and lam from [0.01, 100].
    Deviations are measured relative to ``max(1, |v(x, y)|)``.
    """
    rng = np.random.default_rng(seed)
    a = np.exp(rng.uniform(math.log(0.1), math.log(10.0), samples))
    b = np.exp(rng.uniform(math.log(0.1), math.log(10.0), samples))
    x, y = np.minimum(a, b), np.maximum(a, b)
    lam = np.exp(rng.uniform(math.log(0.01), math.log(100.0), samples))
    ref = v(x, y)
    dev = np.abs(v(lam * x, lam * y) - ref) / np.maximum(1.0, np.abs(ref))
    bad = np.flatnonzero(~(dev <= tol))
    failures = [(float(x[i]), float(y[i]), float(lam[i]), float(dev[i])) for i in bad]
    return HomogeneityReport(samples, failures, float(np.max(dev)) if samples else 0.0)


# -- normalizing functions -----------------------------------------------------------
class NormalizingFn:
    """Outer map ``w`` applied to the expectation; ``mean`` is the law's mean."""

    name: str = "w"

    def __call__(self, x, mean: float | None = None):
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Identity(NormalizingFn):
    name: str = field(default="identity", init=False)

    def __call__(self, x, mean=None):
        return np.asarray(x, dtype=float)


@dataclass(frozen=True)
class AtkinsonW(NormalizingFn):
    gamma: float = 0.5

    def __post_init__(self):
        if not 0 < self.gamma < 1:
            raise DomainError("atkinson normalization needs gamma in (0, 1)")

    @property
    def name(self):
        return f"atkinson:{self.gamma:g}"

    def __call__(self, x, mean=None):
        x = np.asarray(x, dtype=float)
        return 1.0 - np.maximum(1.0 - x, 0.0) ** (1.0 / self.gamma)


@dataclass(frozen=True)
class ChakravartyW(NormalizingFn):
    alpha: float = 2.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("chakravarty normalization needs alpha > 0")

    @property
    def name(self):
        return f"chakravarty:{self.alpha:g}"

    def __call__(self, x, mean=None):
        a = self.alpha
        return 2.0 * (a + 1.0) ** (-1.0 / a) * np.asarray(x, dtype=float) ** (1.0 / a)


@dataclass(frozen=True)
class RootW(NormalizingFn):
    alpha: float = 2.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("root normalization needs alpha > 0")

    @property
    def name(self):
        return f"root:{self.alpha:g}"

    def __call__(self, x, mean=None):
        return np.asarray(x, dtype=float) ** (1.0 / self.alpha)


@dataclass(frozen=True)
class WangW(NormalizingFn):
    """``mu (c x + 1)``; ``c`` is ``1 - g'(1)``, ``mu`` defaults to the law's mean."""

    c: float = 0.5
    mu: float | None = None

    @property
    def name(self):
        return f"wang:{self.c:g}"

    def __call__(self, x, mean=None):
        mu = self.mu if self.mu is not None else mean
        if mu is None:
            raise ConfigError("wang normalization needs the mean of the distribution")
        return mu * (np.asarray(x, dtype=float) * self.c + 1.0)


# -- utility functions ---------------------------------------------------------------
class UtilityFn:
    name: str = "u"
    is_identity: bool = False

    def __call__(self, x):
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IdentityU(UtilityFn):
    name: str = field(default="identity", init=False)
    is_identity: bool = field(default=True, init=False)

    def __call__(self, x):
        return np.asarray(x, dtype=float)


@dataclass(frozen=True)
class PowerU(UtilityFn):
    gamma: float = 0.5

    def __post_init__(self):
        if not 0 < self.gamma < 1:
            raise DomainError("power utility needs gamma in (0, 1)")

    @property
    def name(self):
        return f"power:{self.gamma:g}"

    def __call__(self, x):
        return np.asarray(x, dtype=float) ** self.gamma


@dataclass(frozen=True)
class LinearU(UtilityFn):
    """``u(x) = c x``; lets a reference level be rescaled inside the general index."""

    c: float = 1.0

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError("linear utility needs a positive slope")

    @property
    def name(self):
        return f"linear:{self.c:.17g}"

    def __call__(self, x):
        return self.c * np.asarray(x, dtype=float)
