class InvalidHistoryError(Exception):
    """Raised when a target falls outside [1, t] for some vertex t"""

    pass


class UnknownVertexError(Exception):
    """Raised when a vertex is not in 1..n"""

    pass


class BlockSizeError(Exception):
    """Raised when a graph cannot be collapsed with the requested block size"""

    pass


class EdgeListFormatError(Exception):
    """Raised when an edge-list file does not follow the pa-secdeg v1 layout"""

    pass
