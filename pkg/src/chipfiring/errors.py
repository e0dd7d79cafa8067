"""Exception hierarchy shared by the whole package."""


class ChipFiringError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ChipFiringError, ValueError):
    """Malformed graph, unknown vertex/arc, or a structural precondition failed."""


class ConfigurationError(ChipFiringError, ValueError):
    """Bad chip configuration: negative chips, domain mismatch, wrong host, ..."""


class FiringError(ConfigurationError):
    """A vertex was fired although it is not firable."""


class NonTerminationError(ChipFiringError, RuntimeError):
    """Stabilization exceeded its certified firing bound (host has no global sink)."""


class SizeCapError(ChipFiringError):
    """The requested exhaustive computation exceeds the configured size cap."""


class HypothesisError(ChipFiringError, ValueError):
    """A recursion-formula site does not satisfy the formula's hypothesis."""


class PropertyViolationError(ChipFiringError):
    """A checked identity failed; carries the conflicting data for diagnosis."""

    def __init__(self, message: str, details: object = None):
        super().__init__(message)
        self.details = details


class InternalCheckError(ChipFiringError, AssertionError):
    """A theorem-backed internal consistency check failed: implementation bug."""


class PoleError(ChipFiringError, ZeroDivisionError):
    """Evaluation of a Laurent polynomial with negative exponents at zero."""


class ExactnessError(ChipFiringError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""
