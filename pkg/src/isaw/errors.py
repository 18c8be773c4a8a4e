"""Exception hierarchy shared by every isaw module."""


class IsawError(Exception):
    """Base class for all errors raised by isaw."""


class EmptyInput(IsawError, ValueError):
    pass


class UnaryAlphabet(IsawError, ValueError):
    """The text would be over a one-letter alphabet."""


class SigmaTooSmall(IsawError, ValueError):
    pass


class LengthOutOfRange(IsawError, ValueError):
    pass


class RangeOutOfBounds(IsawError, IndexError):
    pass


class IndexOutOfRange(IsawError, IndexError):
    pass


class NotFound(IsawError, LookupError):
    """select asked for more bits than the vector holds."""


class LayerBeyondEll(IsawError, ValueError):
    """Occurrence layers only exist for lengths below the global answer."""


class InternalInvariantViolation(IsawError, AssertionError):
    pass


class WindowTooLarge(IsawError, ValueError):
    pass


class BoundViolated(IsawError, AssertionError):
    """A combinatorial bound that must always hold was measured to fail."""


class ChecksumMismatch(IsawError, ValueError):
    pass


class IndexFormatError(IsawError, ValueError):
    pass
