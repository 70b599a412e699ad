"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration and validation
problems are usage errors (exit 2), everything else that escapes a run
is a runtime failure (exit 1).
"""


class FscilError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(FscilError, ValueError):
    """Operands have incompatible or malformed dimensions."""


class NumericalError(FscilError, ArithmeticError):
    """A numerical precondition failed (non-SPD pivot, non-finite loss,
    near-zero norm)."""


class ConfigError(FscilError, ValueError):
    """A configuration value is outside its documented domain."""


class StateError(FscilError, RuntimeError):
    """An operation was called in a state that forbids it."""


class ValidationError(FscilError, ValueError):
    """Loaded data violates a structural contract (label overlap,
    shot-count mismatch, shape inconsistency)."""


class ParseError(FscilError, ValueError):
    """A file could not be parsed; carries location information."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}: "
        if line is not None:
            loc = f"{loc}line {line}: "
        super().__init__(f"{loc}{message}")
        self.path = path
        self.line = line
