"""Exception hierarchy shared by all workbench modules."""


class CbundleError(Exception):
    """Base class for every error raised by the package."""


class ConfigurationError(CbundleError):
    """Unsupported or malformed input (series/rank, config keys, block sizes)."""


class DomainError(CbundleError, ValueError):
    """An argument lies outside the domain of the operation."""


class HypothesisError(CbundleError):
    """A hypothesis of the construction (standardness, hyperbolicity, ...) fails."""


class ResonanceError(CbundleError, ArithmeticError):
    """Raised when b.m vanishes for some exponent m of the right-hand side."""

    def __init__(self, exponent):
        self.exponent = tuple(exponent)
        super().__init__(f"resonant exponent m={self.exponent}: b.m = 0")


class SolverFailure(CbundleError):
    """Newton iteration failed to converge from every start."""


class ChartError(CbundleError):
    """Point lies outside the big cell (F vanishes)."""
