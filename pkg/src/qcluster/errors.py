"""Exceptions shared across the engine."""


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the dividend is not a multiple."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget."""


class IncompatiblePairError(ValueError):
    """The exchange matrix and skew form do not form a compatible pair."""


class UnsupportedQuiverError(ValueError):
    """The quiver is outside the supported finite-type families."""


class VerificationError(RuntimeError):
    """A checked identity failed or a recursion invariant was violated;
    either would be a counterexample to the verified statements."""
