"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be decoded."""


class DomainError(ValueError):
    """Raised when an analysis is called outside the domain where it is defined.

    The message names the violated precondition, e.g. ``"|K| >= 2 required"``.
    """


class TheoremViolation(AssertionError):
    """An identity that must hold on every split graph was observed to fail.

    Seeing one of these means an implementation bug, not bad input.
    """
