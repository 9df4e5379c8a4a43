"""Exception hierarchy shared by every module.

``DomainError`` covers bad input (the CLI maps it to exit code 2);
``MathAssertionError`` signals that a computed invariant failed (exit code 3).
"""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class PreconditionError(DomainError):
    """A documented precondition on the arguments does not hold."""


class MathAssertionError(RuntimeError):
    """A mathematical invariant that should hold was violated."""
