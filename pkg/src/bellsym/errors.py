"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured object/node budget."""


class CrossCheckError(RuntimeError):
    """Two independent computation routes disagreed (implementation bug)."""
