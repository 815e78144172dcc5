"""Exception hierarchy.

Everything raised on bad input derives from :class:`JordanTypeError`.
:class:`InvariantViolation` is reserved for internal consistency checks that
failed, which signals a bug or an inconsistent input rather than user error.
"""


class JordanTypeError(Exception):
    pass


class DimensionError(JordanTypeError, ValueError):
    pass


class RingMismatchError(JordanTypeError, ValueError):
    pass


class ParseError(JordanTypeError, ValueError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnsupportedCharacteristicError(JordanTypeError, ValueError):
    pass


class UnsupportedError(JordanTypeError, ValueError):
    pass


class NotArtinianError(JordanTypeError, ValueError):
    pass


class NotNilpotentError(JordanTypeError, ValueError):
    pass


class NotGorensteinError(JordanTypeError, ValueError):
    pass


class NotGradedError(JordanTypeError, ValueError):
    pass


class NotAnIdealError(JordanTypeError, ValueError):
    pass


class SizeMismatchError(JordanTypeError, ValueError):
    pass


class HilbertFunctionMismatchError(JordanTypeError, ValueError):
    pass


class AmbiguousGenericError(JordanTypeError):
    """Sampled Jordan types were pairwise incomparable in dominance."""

    def __init__(self, message, candidates):
        self.candidates = candidates
        super().__init__(message)


class InvariantViolation(JordanTypeError, AssertionError):
    pass
