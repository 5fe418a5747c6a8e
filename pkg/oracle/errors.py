class WindowTooSmallError(Exception):
    """Raised when a cell outside the computed (l, k, d) window is requested"""

    pass


class EnumerationCapError(Exception):
    """Raised when full enumeration is requested above the configured cap"""

    pass


class RecurrenceInvariantError(Exception):
    """
    Raised when the expectation recurrences break an invariant: a negative
    update coefficient meets a nonzero value, or mass is not conserved
    """

    pass


class ExactModeLimitError(Exception):
    """Raised when rational recurrences are requested above the served exact limit"""

    pass
