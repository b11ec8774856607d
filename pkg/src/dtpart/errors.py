"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the region where a quantity is defined."""


class ConvergenceError(ArithmeticError):
    """Iterative solver failed to reach the requested residual."""


class BudgetExceeded(RuntimeError):
    """Requested computation exceeds the configured work budget."""
