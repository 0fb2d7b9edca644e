"""Exception types shared across the package."""


class CliffordInvError(Exception):
    """Base class for errors raised by this package."""


class BudgetError(CliffordInvError):
    """A computation would exceed its configured size budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotClaimedError(CliffordInvError):
    """The requested check is outside the range where the statement is made."""


class UnsupportedError(CliffordInvError, ValueError):
    """Unsupported group kind, field or parameter combination."""


class UnknownCodeError(CliffordInvError, KeyError):
    """A code name that is not in the registry and is not a readable file."""


class NotSelfDualError(CliffordInvError, ValueError):
    pass
