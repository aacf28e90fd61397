"""Inequality and risk indices built from Lorenz-type societal functions."""

from .distributions import (Affine, Distribution, Empirical, Exponential, Lognormal, Pareto,
                            PointMass, Uniform, transform_affine)
from .errors import (AtomicGamble, ConfigError, DivisionByZero, DomainError, FormMismatch,
                     IneqlabError, InfiniteMean, InfiniteRiskMeasure, InvalidGenerator, NoDensity,
                     NonConvergence, NonFinite, ZeroLowerMean)
from .gambles import (BetaGamble, GamblePair, Gamble, GeneratorFn, GGenerated, HGenerated,
                      PointGamble, TruncatedGamble, exp_g_generator, exp_h_generator,
                      power_generator, validate_generator)
from .indices import (IndexResult, IndexSpec, Table1Params, atkinson, bonferroni_index,
                      chakravarty, chakravarty_tilde, dwk, dwk_h, general_index, gini, palma, pht,
                      relative_risk, table1_crosscheck, table1_spec, wang, zenga_index)
from .orderings import (OrderingReport, lorenz_order, pigou_dalton_order, r_order,
                        sign_pattern_check)
from .quadrature import (IntegrationResult, QuadratureConfig, integrate, integrate_halfline,
                         integrate_unit)
from .societal import (SocietalFunction, bonferroni_curve, lce, lorenz, risk_function, uce)
from .zenga import Zenga, zenga_cdf, zenga_pdf, zenga_quantile

__version__ = "0.1.0"
