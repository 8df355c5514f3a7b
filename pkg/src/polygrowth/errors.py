"""Exception hierarchy shared by every module."""


class PolygrowthError(Exception):
    pass


class DomainError(PolygrowthError, ValueError):
    """A parameter lies outside the range where an operation is defined."""


class ResourceError(PolygrowthError, RuntimeError):
    """A computation would exceed its configured budget.

    ``achievable`` carries the best error radius reached before giving up,
    when one is known.
    """

    def __init__(self, message, achievable=None):
        super().__init__(message)
        self.achievable = achievable


class HypothesisError(PolygrowthError, ValueError):
    """A polynomial does not belong to the hypothesis class of a bound."""
