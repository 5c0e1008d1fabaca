"""Exception types raised by the verification engine."""

from weightedcomplex.config import settings


class CapExceededError(ValueError):
    """Raised when an enumeration is asked to run beyond its configured cap."""

    def __init__(self, what: str, n: int, cap: int) -> None:
        super().__init__(f"{what} refused for n={n}: configured cap is {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class ParseError(ValueError):
    """Raised when a weight vector, permutation or order file cannot be parsed."""


class DecompositionError(RuntimeError):
    """Raised when an interval decomposition turns out not to be disjoint or exhaustive."""


def check_cap(what: str, n: int, cap_name: str) -> None:
    """Refuse `n` when it exceeds the named cap on the live settings.

    Args:
        what: Human-readable name of the enumeration (for the message).
        n: Requested size.
        cap_name: Attribute of `settings` holding the cap.

    Raises:
        CapExceededError: If n exceeds the cap.
    """
    cap = getattr(settings, cap_name)
    if n > cap:
        raise CapExceededError(what, n, cap)
