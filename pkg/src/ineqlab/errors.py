"""Exception hierarchy shared by all modules."""


class IneqlabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(IneqlabError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonConvergence(IneqlabError, ArithmeticError):
    """An iterative or adaptive routine ran out of budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NonFinite(IneqlabError, ArithmeticError):
    """An integrand returned inf or nan at an interior node."""


class InfiniteMean(IneqlabError, ValueError):
    pass


class InfiniteRiskMeasure(IneqlabError, ValueError):
    pass


class DivisionByZero(IneqlabError, ZeroDivisionError):
    """A relative comparison divided by a vanishing argument."""

    def __init__(self, message, argument=None):
        super().__init__(message)
        self.argument = argument


class ZeroLowerMean(DivisionByZero):
    """The lower conditional expectation vanished where it is a denominator."""


class FormMismatch(IneqlabError, ArithmeticError):
    """Two mathematically equivalent routes to an index disagree."""

    def __init__(self, message, forms=None):
        super().__init__(message)
        self.forms = dict(forms or {})


class InvalidGenerator(IneqlabError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class AtomicGamble(IneqlabError, TypeError):
    """A density was requested from a gamble that is a point mass."""


class NoDensity(IneqlabError, TypeError):
    """The distribution has atoms and no Lebesgue density."""


class ConfigError(IneqlabError, ValueError):
    """A command-line argument or compact spec string could not be parsed."""
