"""Exception types shared across the library."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of a formula."""


class CommensurabilityError(ValueError):
    """Trap frequency ratios are not close enough to integers."""


class InapplicableFormulaError(ValueError):
    """A regime-specific formula was requested outside its regime."""


class UnsupportedOrderError(ValueError):
    """Requested expansion order or index is not implemented."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to reach tolerance within its budget.

    The ``bound`` attribute carries the best error bound achieved (the
    size of the last term for a truncated series).
    """

    def __init__(self, message: str, bound: float | None = None):
        super().__init__(message)
        self.bound = bound
