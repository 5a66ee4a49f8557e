"""Exception hierarchy shared by all modules."""


class HardStringsError(Exception):
    """Base class for every error raised by the package."""


class ParamError(HardStringsError, ValueError):
    pass


class LengthMismatch(ParamError):
    pass


class ShapeMismatch(ParamError):
    pass


class ShapeError(ParamError):
    pass


class InvalidLevel(ParamError):
    pass


class EmptyInput(ParamError):
    pass


class NotPowerOfTwo(ParamError):
    pass


class NonBinarySymbol(ParamError):
    pass


class MixedLengths(ParamError):
    pass


class AlphabetClash(ParamError):
    pass


class PatternTooLong(ParamError):
    pass


class EmptySet(ParamError):
    pass


class TooLarge(ParamError):
    """A brute-force enumeration would exceed the configured size limit."""


class NotFound(HardStringsError):
    """A search strategy exhausted its budget without a passing candidate."""


# Name used by the reduction layer for a failed gap search.
GapNotFound = NotFound


class ReductionError(HardStringsError):
    """A proved property of a reduction was observed to fail."""


class FormatError(HardStringsError):
    """A file does not follow its declared format."""
