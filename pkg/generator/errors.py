class GeneratorStateError(Exception):
    """Raised for invalid generator inputs (negative sizes, seeds outside 64 bits)"""

    pass
