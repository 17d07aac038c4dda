"""Exception types shared across the package.

The CLI maps these onto fixed exit codes, so new error conditions should
reuse one of these classes rather than raising bare built-ins.
"""


class ClassMismatchError(ValueError):
    """Operands do not share dimensions and margins (not in one class A(R,S))."""


class InfeasibleMarginsError(ValueError):
    """The requested class A(R,S) is empty (Gale-Personen test failed)."""


class HypothesisViolationError(ValueError):
    """A construction's hypothesis fails (u' = u'' in the product theorem)."""


class BudgetExceededError(RuntimeError):
    """An enumeration or search exceeds its configured budget."""


class ResourceLimitError(RuntimeError):
    """A closure search exceeds its node cap."""
