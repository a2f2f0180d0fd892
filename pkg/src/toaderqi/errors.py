"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NonConvergence(ArithmeticError):
    """An iterative method exhausted its budget before meeting its tolerance."""


class ConsistencyError(ArithmeticError):
    """Two independent evaluation routes disagree beyond tolerance."""


class UnsupportedKind(ValueError):
    """The requested mean kind has no implementation for this operation."""


class UnknownCase(KeyError):
    """No inequality case is registered under the given id."""


class NoSharpnessData(LookupError):
    """The case carries no sharpness metadata to probe."""


class UnknownSequence(KeyError):
    """No sequence is exported under the given name."""
