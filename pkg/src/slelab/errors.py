"""Exception types shared across the package."""


class SleLabError(Exception):
    """Base class for all slelab errors."""


class DomainError(SleLabError, ValueError):
    """A parameter is outside the domain where an operation is defined."""


class AnnularTimeExceeded(DomainError):
    """Requested horizon reaches or exceeds the annulus modulus p."""


class NonFiniteState(SleLabError, ArithmeticError):
    """The integrator produced a non-finite value (step-size failure)."""


class TipEscape(SleLabError, ArithmeticError):
    """Backward trace integration left the domain (tip offset too large)."""


class SingularDrift(SleLabError, ArithmeticError):
    """Boundary-motion drift exceeded the configured bound near the terminal time."""


class TruncationOverflow(SleLabError, ValueError):
    """A lowering operator would push a vector past the module's level truncation."""
