"""Exception types shared across the package."""


class GassnerError(Exception):
    pass


class VariableCountError(GassnerError, ValueError):
    """Binary operation on polynomials from rings with different variable counts."""


class DimensionError(GassnerError, ValueError):
    pass


class DomainError(GassnerError, ValueError):
    """Evaluation or inversion outside the domain of definition."""


class UnsupportedSizeError(GassnerError, ValueError):
    pass


class PreconditionError(GassnerError, ValueError):
    pass


class NearPoleError(PreconditionError):
    """Some t_i is within the pole guard of 1."""


class BraidParseError(GassnerError, ValueError):
    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position
