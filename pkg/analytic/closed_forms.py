from fractions import Fraction
from math import factorial, prod

from .errors import ArgumentDomainError


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ArgumentDomainError(f"double factorial is undefined for {n}")
    return prod(range(n, 0, -2))


def c1(k: int) -> Fraction:
    """First row of the c table: (2k^2 + 14k) / ((k+1)(k+2)(k+3)(k+4))."""
    if k < 0:
        raise ArgumentDomainError(f"k must be >= 0, received {k}")
    return Fraction(2 * k * k + 14 * k, (k + 1) * (k + 2) * (k + 3) * (k + 4))


def c1_tail(kmax: int) -> Fraction:
    """
    sum of c(1, k) over k > kmax, from the partial fractions
    c(1,k) = -2/(k+1) + 10/(k+2) - 12/(k+3) + 4/(k+4).
    """
    K = kmax
    return Fraction(-2, K + 2) + Fraction(8, K + 3) - Fraction(4, K + 4)


def row_sum_target(l: int) -> Fraction:
    """Sum of the l-th row of the c table: 4 / (l(l+1)(l+2))."""
    if l < 1:
        raise ArgumentDomainError(f"l must be >= 1, received {l}")
    return Fraction(4, l * (l + 1) * (l + 2))


def rows_beyond(lmax: int) -> Fraction:
    """Mass of all rows l > lmax: 2 / ((lmax+1)(lmax+2))."""
    return Fraction(2, (lmax + 1) * (lmax + 2))


def m1_closed(n: int, d: int) -> Fraction:
    """Leading term of the expected number of vertices of degree d: 4n / (d(d+1)(d+2))."""
    if d < 1:
        raise ArgumentDomainError(f"degree must be >= 1, received {d}")
    if n < 0:
        raise ArgumentDomainError(f"n must be >= 0, received {n}")
    return Fraction(4 * n, d * (d + 1) * (d + 2))


def m2_leading(n: int, k: int) -> Fraction:
    """Leading term of the expected number of vertices of second degree k: 4n / k^2."""
    if k < 1:
        raise ArgumentDomainError(f"second degree must be >= 1, received {k}")
    return Fraction(4 * n, k * k)


def x_closed_form(k: int) -> Fraction:
    """Leading term of x_k = sum_{l>=2} c(l,k): 2 / ((k+1)(k+2))."""
    if k < 0:
        raise ArgumentDomainError(f"k must be >= 0, received {k}")
    return Fraction(2, (k + 1) * (k + 2))


def p_row_zero(l: int) -> Fraction:
    """p(l, 0) = 2^-(l-2) for l >= 2."""
    if l < 2:
        return Fraction(0)
    return Fraction(1, 2 ** (l - 2))


def p_ceiling(l: int) -> Fraction:
    """Upper bound 6 / (l(l+1)) on every p(l, k)."""
    return Fraction(6, l * (l + 1))


def c2_floor(l: int) -> Fraction:
    """Lower bound 24 (l-1)! / (5 (2l+4)!!) on c(l, 2)."""
    return Fraction(24 * factorial(l - 1), 5 * double_factorial(2 * l + 4))
