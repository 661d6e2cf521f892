"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments lie outside an operation's domain (e.g. more parts than vertices)."""


class ColoringCapError(RuntimeError):
    """A coloring search was requested on more vertices than the safety cap allows."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured search budget.

    Carries the required and allowed search-space sizes in bits so callers can
    report exactly how far over budget the request was.
    """

    def __init__(self, required_bits: int, allowed_bits: int):
        self.required_bits = required_bits
        self.allowed_bits = allowed_bits
        super().__init__(
            f"enumeration needs 2^{required_bits} evaluations, budget allows "
            f"2^{allowed_bits}; pass an override to run anyway"
        )


class InternalInconsistencyError(RuntimeError):
    """A proven identity failed to hold, which can only mean an implementation bug."""
