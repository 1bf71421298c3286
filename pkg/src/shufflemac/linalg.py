"""Dense Gaussian elimination over any exact field.

Entries may be :class:`~shufflemac.arith.RationalFunction` or
:class:`fractions.Fraction`; only ``+ - * /`` and truthiness are used.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularSystem(ArithmeticError):
    """The matrix is singular."""


def _field(v):
    # plain ints would divide into floats
    return Fraction(v) if isinstance(v, int) else v


def _copy(a: Sequence[Sequence]) -> list[list]:
    return [[_field(v) for v in row] for row in a]


def determinant(a: Sequence[Sequence], one=1):
    m = _copy(a)
    n = len(m)
    det = one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return det * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / p
                m[r] = [x - f * y if j >= col else x for j, (x, y) in enumerate(zip(m[r], m[col]))]
    return det


def solve(a: Sequence[Sequence], b: Sequence) -> list:
    """Solve a x = b."""
    n = len(a)
    m = [[_field(v) for v in row] + [_field(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def inverse(a: Sequence[Sequence], one=1, zero=0) -> list[list]:
    n = len(a)
    m = [[_field(v) for v in row] + [_field(one if i == j else zero) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
