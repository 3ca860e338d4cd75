class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined."""


class ConvergenceError(RuntimeError):
    """An iteration hit its cap. Cannot happen for valid input."""
