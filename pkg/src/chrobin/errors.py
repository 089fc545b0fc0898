"""Exception types shared across the package."""


class ConfigError(Exception):
    """Raised for invalid configuration files, keys, or parameter values."""


class MeshValidationError(Exception):
    """Raised when a mesh fails validation and is handed to assembly anyway."""


class SolverError(Exception):
    """Raised when a nonlinear or linear solve fails.

    Carries optional context so callers can report partial results.
    """

    def __init__(self, message, step_index=None, diagnostics=None, partial=None):
        super().__init__(message)
        self.step_index = step_index
        self.diagnostics = diagnostics or {}
        self.partial = partial
