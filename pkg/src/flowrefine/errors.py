"""Exception types shared across the package."""


class ContractError(ValueError):
    """An argument violates a documented precondition (shape, bounds, domain)."""


class NumericsError(ArithmeticError):
    """A computation produced a non-finite intermediate or result."""


class GenerationError(RuntimeError):
    """A synthetic task could not be realized with the requested geometry."""


class DegeneratePrototypeError(ContractError):
    """The prompt prototype collapsed to the zero vector; decoding is undefined."""


class ValidationError(ValueError):
    """A config value is well-formed but semantically invalid (CLI exit code 1)."""


class ConfigIOError(RuntimeError):
    """A config or data file could not be read, parsed, or written (CLI exit code 2)."""
