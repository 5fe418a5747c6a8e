from fractions import Fraction
from math import factorial

from analytic import double_factorial
from .errors import WindowTooSmallError


def boundary_expectation(l: int) -> Fraction:
    """
    E N_{l+1}(l, 2) = 2 (l-1)! / (2l+1)!!, the only way a loopless vertex of
    degree l reaches second degree 2 with l + 1 vertices.
    """
    if l < 1:
        raise WindowTooSmallError(f"l must be >= 1, received {l}")
    return Fraction(2 * factorial(l - 1), double_factorial(2 * l + 1))


def looped_boundary_expectation(l: int) -> Fraction:
    """
    E P_{l-1}(l, 0): vertex 1 keeps its loop and every later vertex attaches
    to it, with probability prod_{t=2}^{l-1} t/(2t-1) = (l-1)! / (2l-3)!!.
    """
    if l < 2:
        raise WindowTooSmallError(f"l must be >= 2, received {l}")
    return Fraction(factorial(l - 1), double_factorial(2 * l - 3))


def stated_looped_boundary(l: int) -> Fraction:
    """(l-1)! / (2l-1)!!, the form that counts a loop once."""
    if l < 2:
        raise WindowTooSmallError(f"l must be >= 2, received {l}")
    return Fraction(factorial(l - 1), double_factorial(2 * l - 1))


def p20_closed(n: int) -> Fraction:
    """E P_n(2, 0) = n / (2n - 1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, received {n}")
    return Fraction(n, 2 * n - 1)
