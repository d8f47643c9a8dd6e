"""Exact scalar arithmetic and small integer linear algebra.

Rational values throughout the package are plain :class:`fractions.Fraction`
instances.  ``Fraction`` already guarantees lowest terms and a positive
denominator, so equality is structural; graded tables keyed by rational
degrees rely on this.  The helpers here add the handful of operations the
rest of the package needs: floor/fractional part, extended Euclid, modular
inverse, exact integer determinants, and the ``"num/den"`` string form used
by every JSON surface.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import BothZero, InputError, NonSquare, NotCoprime

Rat = Union[int, Fraction]


def rat_floor(q: Rat) -> int:
    """Largest integer <= q."""
    q = Fraction(q)
    return q.numerator // q.denominator


def frac_part(q: Rat) -> Fraction:
    """Fractional part {q} = q - floor(q), always in [0, 1)."""
    q = Fraction(q)
    return q - rat_floor(q)


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with g = gcd(x, y) > 0 and u*x + v*y = g."""
    if x == 0 and y == 0:
        raise BothZero("gcd(0, 0) is undefined")
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inverse(x: int, modulus: int) -> int:
    """Inverse of x modulo `modulus`, as the representative in {1, ..., modulus-1}."""
    if modulus < 2:
        raise InputError(f"modular inverse needs modulus >= 2, got {modulus}")
    g, u, _ = ext_gcd(x % modulus, modulus)
    if g != 1:
        raise NotCoprime(x, modulus)
    return u % modulus


def _det_cofactor(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    sign = 1
    for col in range(n):
        if rows[0][col] != 0:
            minor = [[row[c] for c in range(n) if c != col] for row in rows[1:]]
            total += sign * rows[0][col] * _det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss(rows: list[list[int]]) -> int:
    # Fraction-free elimination: every intermediate entry stays an exact
    # integer, and each division below is exact by the Bareiss identity.
    n = len(rows)
    mat = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Cofactor expansion up to 4x4, Bareiss fraction-free elimination above.
    """
    n = len(rows)
    if n == 0:
        raise NonSquare("determinant of an empty matrix is undefined")
    cells = []
    for row in rows:
        if len(row) != n:
            raise NonSquare(f"matrix is {n} rows but a row has {len(row)} entries")
        for x in row:
            if not isinstance(x, int):
                raise InputError(f"integer matrix entry expected, got {x!r}")
        cells.append([int(x) for x in row])
    if n <= 4:
        return _det_cofactor(cells)
    return _det_bareiss(cells)


def rat_str(q: Rat) -> str:
    """Canonical "num/den" form; zero prints as "0/1"."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    """Parse "num/den" or a bare integer string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational from {text!r}: {exc}") from exc


__all__ = [
    "Rat",
    "rat_floor",
    "frac_part",
    "ext_gcd",
    "mod_inverse",
    "det_int",
    "rat_str",
    "parse_rat",
    "gcd",
]
