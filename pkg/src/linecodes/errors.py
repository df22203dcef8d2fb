from __future__ import annotations


class LineCodeError(ValueError):
    """Base class for errors raised by this package."""


class UsageError(LineCodeError):
    """Argument outside the supported range or of the wrong kind."""


class DegenerateLineError(LineCodeError):
    pass


class DegenerateCodeError(LineCodeError):
    """All codelines lie in one hyperplane, so some nonzero codeword vanishes."""


class OracleRefusedError(LineCodeError):
    pass


class CodeFileError(LineCodeError):
    pass
