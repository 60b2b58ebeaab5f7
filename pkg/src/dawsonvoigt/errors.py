"""Exception types shared across the package."""


class DawsonVoigtError(Exception):
    """Base class for all library errors."""


class InvalidParamsError(DawsonVoigtError, ValueError):
    """Approximation parameters violate their invariants."""


class NonFiniteInputError(DawsonVoigtError, ValueError):
    """An evaluation input was nan or infinite."""


class NegativeYError(DawsonVoigtError, ValueError):
    """y < 0 is outside the supported upper half-plane."""


class DomainError(DawsonVoigtError, ValueError):
    """Input lies outside the operation's supported domain."""


class ConvergenceError(DawsonVoigtError, RuntimeError):
    """An iterative evaluation hit its depth cap without converging."""


class PrecisionError(DawsonVoigtError, RuntimeError):
    """A reference quadrature failed its own refinement agreement check."""


class MissingReferenceError(DawsonVoigtError, KeyError):
    """A requested point is not covered by the oracle cache."""
