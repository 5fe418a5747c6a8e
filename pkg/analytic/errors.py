class TableRangeError(Exception):
    """Raised when a cell or table size outside the supported range is requested"""

    pass


class ArgumentDomainError(Exception):
    """Raised when a closed form is evaluated outside its domain (e.g. d < 1)"""

    pass


class ToleranceUnreachableError(Exception):
    """Raised when a truncation tail cannot be pushed below the requested tolerance"""

    pass
