"""Exception and warning types raised by the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class PoleError(DomainError):
    """Evaluation at a pole (e.g. the gamma function at a nonpositive integer)."""


class ConvergenceError(ArithmeticError):
    """An iterative scheme hit its iteration or level cap before converging."""


class AccuracyWarning(UserWarning):
    """The returned value may carry fewer correct digits than usual."""
