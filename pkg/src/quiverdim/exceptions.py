class QuiverDimError(Exception):
    pass


class InputError(QuiverDimError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotAdmissibleError(QuiverDimError):
    """The relations do not cut the path algebra down to a finite-dimensional admissible quotient."""


class ResourceCeilingError(QuiverDimError):
    def __init__(self, message, estimate=None):
        self.estimate = estimate
        super().__init__(message)


class UndeterminedError(QuiverDimError):
    """A resolution was truncated before the requested degree."""
