from __future__ import annotations

__doc__ = """
Exception hierarchy shared by every rieszsup package.

All errors derive from `RieszError`, itself a `ValueError`, so callers that
already guard numerical input with ``except ValueError`` keep working.
"""


class RieszError(ValueError):
    """Base class for all errors raised by rieszsup."""


class DimensionMismatch(RieszError):
    """Raised when two operands live on a different number of atoms."""

    def __init__(self, left: int, right: int, *, op: str = "operation") -> None:
        self.left = left
        self.right = right
        super().__init__(f"{op}: dimension mismatch ({left} vs {right})")


class UndefinedSum(RieszError):
    """Raised for a sum or difference that has no value in the sup-completion."""


class UndefinedProduct(RieszError):
    """Raised for a product pairing a negative coordinate with infinity."""


class NegativeScaleOnInfinite(RieszError):
    """Raised when a negative scalar multiplies an element with an infinite
    coordinate."""


class PreconditionViolated(RieszError):
    """Raised when an operation's documented precondition does not hold."""


class ShapeMismatch(RieszError):
    """Raised for matrices or block splits of the wrong shape."""


class IndexOutOfRange(RieszError, IndexError):
    """Raised for an atom or sequence index outside the valid range."""


class NonPeriodicInput(RieszError):
    """Raised when a bound computation receives a sequence it cannot treat
    as eventually periodic."""


class EmptyCheckpoints(RieszError):
    """Raised when a bound report is requested without checkpoints."""


class DepthTooLarge(RieszError):
    """Raised when a product-space experiment would exceed the atom budget."""


class ParseError(RieszError):
    """
    Raised for malformed textual input.

    Parameters
    ----------
    message : str
        What went wrong.
    location : str, optional
        Field path (e.g. ``weights_seq.cycle[1][0]``) or ``line:column``.
    """

    def __init__(self, message: str, location: str | None = None) -> None:
        self.location = location
        text = f"{location}: {message}" if location else message
        super().__init__(text)


class UnknownLemma(RieszError):
    """Raised when the check harness is asked for an unregistered lemma."""
