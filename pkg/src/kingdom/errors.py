class KingdomError(Exception):
    """Base class for all errors raised by this package."""


class BoardSpecError(KingdomError, ValueError):
    """Malformed or inconsistent board specification."""


class GuardError(KingdomError):
    """A computation would exceed one of the configured size guards."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"{guard}: {message}")
        self.guard = guard


class UnsupportedError(KingdomError):
    """The requested operation is not defined for this board."""


class NotDominatingError(KingdomError, ValueError):
    pass
