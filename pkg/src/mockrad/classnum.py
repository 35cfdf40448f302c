"""Hurwitz class numbers, three-squares counts, and the h_j series.

H(n) is computed by direct enumeration of SL2(Z)-reduced positive definite
binary quadratic forms (a, b, c) of discriminant b^2 - 4ac = -n, weighting
the classes proportional to x^2+y^2 by 1/2 and those proportional to
x^2+xy+y^2 by 1/3.  H(0) = -1/12 by convention; H(n) = 0 for n = 1, 2 mod 4.
The enumeration doubles as the exact oracle for everything downstream, so no
class-number formula shortcuts are used.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .qexact import FracSeries, Rat

_H_ZERO = Fraction(-1, 12)

_hurwitz_cache: dict[int, Rat] = {}
_uneven_cache: dict[int, int] = {}


def _reduced_forms(n: int):
    """Yield SL2(Z)-reduced forms (a, b, c) with b^2 - 4ac = -n.

    Reduction: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
    """
    a = 1
    while 3 * a * a <= n:
        for b in range(-a + 1, a + 1):
            val = b * b + n
            if val % (4 * a):
                continue
            c = val // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue
            yield a, b, c
        a += 1


def hurwitz(n: int) -> Rat:
    """Hurwitz class number H(n) as an exact rational."""
    if n < 0:
        raise ValueError("H(n) requires n >= 0")
    if n == 0:
        return _H_ZERO
    if n % 4 in (1, 2):
        return 0
    cached = _hurwitz_cache.get(n)
    if cached is not None:
        return cached
    total = Fraction(0)
    for a, b, c in _reduced_forms(n):
        if b == 0 and a == c:
            total += Fraction(1, 2)  # multiple of x^2 + y^2
        elif a == b == c:
            total += Fraction(1, 3)  # multiple of x^2 + xy + y^2
        else:
            total += 1
    value: Rat = int(total) if total.denominator == 1 else total
    _hurwitz_cache[n] = value
    return value


def uneven_class_count(n: int) -> int:
    """Plain (unweighted) count of reduced form classes of odd discriminant -n
    whose class represents odd integers.

    For odd n every reduced form (a, b, c) has b odd, hence a + b + c odd, so
    the count equals the number of reduced classes.  Only used for n = 3 mod 4.
    """
    if n % 4 != 3:
        raise ValueError("uneven class count is only used for n = 3 mod 4 here")
    cached = _uneven_cache.get(n)
    if cached is None:
        cached = sum(1 for _ in _reduced_forms(n))
        _uneven_cache[n] = cached
    return cached


def r3(n: int) -> int:
    """Number of (x, y, z) in Z^3 with x^2+y^2+z^2 = n, by direct enumeration."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    root = isqrt(n)
    count = 0
    for x in range(-root, root + 1):
        rx = n - x * x
        ry_root = isqrt(rx)
        for y in range(-ry_root, ry_root + 1):
            rz = rx - y * y
            z = isqrt(rz)
            if z * z == rz:
                count += 1 if z == 0 else 2
    return count


def r3_table(n_max: int) -> list[int]:
    """All r3(n) for 0 <= n <= n_max in one sweep over the lattice cube."""
    table = [0] * (n_max + 1)
    root = isqrt(n_max)
    squares = [x * x for x in range(root + 1)]
    for x in range(root + 1)[::-1]:
        sx = squares[x]
        mx = 2 if x else 1
        for y in range(isqrt(n_max - sx) + 1):
            sxy = sx + squares[y]
            mxy = mx * (2 if y else 1)
            for z in range(isqrt(n_max - sxy) + 1):
                table[sxy + squares[z]] += mxy * (2 if z else 1)
    return table


def h_series(j: int, order: int) -> FracSeries:
    """h_j(tau) = sum_{n>=0} H(4n+3j) q^(n + 3j/4), truncated at q^order.

    Exponent lattice D = 4; the exponent numerator of the n-th term is the
    discriminant 4n + 3j itself.
    """
    if j not in (0, 1):
        raise ValueError("j must be 0 or 1")
    trunc = 4 * order
    coeffs = {}
    n = 0
    while 4 * n + 3 * j < trunc:
        v = hurwitz(4 * n + 3 * j)
        if v:
            coeffs[4 * n + 3 * j] = v
        n += 1
    return FracSeries(4, trunc, coeffs)
