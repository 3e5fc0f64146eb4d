"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
them (rather than bare ValueError/RuntimeError) whenever the failure is
meaningful to a caller.
"""


class ArgumentError(ValueError):
    """An argument is outside the documented domain (wrong sign, non-finite,
    window outside the state grid, ...)."""


class PreconditionError(ArgumentError):
    """Arguments are individually valid but the requested quantity is not
    defined for them (e.g. a selection event of ~zero probability)."""


class NumericError(ArithmeticError):
    """An iterative scheme failed to reach its target accuracy."""
