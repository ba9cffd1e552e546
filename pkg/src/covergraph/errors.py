"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph input (bad line, label out of range, duplicate edge)."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured search budget."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same object disagree.

    This always signals an implementation bug, never bad input.
    """
