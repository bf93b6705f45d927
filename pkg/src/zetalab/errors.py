"""Exception hierarchy shared by every evaluator.

Argument and domain problems derive from ``ValueError`` (CLI exit code 2);
non-finite intermediates derive from ``ArithmeticError`` (CLI exit code 3).
"""


class ZetaLabError(Exception):
    pass


class DomainError(ZetaLabError, ValueError):
    """Input outside the domain where an operation is defined."""


class RangeError(DomainError):
    """Integer index (Bernoulli order, derivative order) out of the supported range."""


class PoleError(DomainError):
    """Evaluation requested at a pole, e.g. zeta at s = 1."""


class SingularityError(DomainError):
    """Evaluation too close to a zero of 1 - 2**(1-s)."""


class NumericalFailure(ZetaLabError, ArithmeticError):
    """A non-finite value appeared where a finite one was required."""
