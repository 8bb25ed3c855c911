"""Exception hierarchy shared by every module."""


class UnitAlgError(Exception):
    """Base class for all errors raised by unitalg."""


class InvalidInputError(UnitAlgError, ValueError):
    """Malformed input or a violated precondition."""


class FieldMismatchError(InvalidInputError):
    """Operands live over different fields (or algebras)."""


class CapExceededError(UnitAlgError, RuntimeError):
    """An exhaustive scan would exceed the configured enumeration cap."""

    def __init__(self, needed, cap, what="scan"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what} needs {needed} steps, above cap {cap}")


DEFAULT_CAP = 10**7


def check_cap(needed, cap, what="scan"):
    if cap is None:
        cap = DEFAULT_CAP
    if needed > cap:
        raise CapExceededError(needed, cap, what)
