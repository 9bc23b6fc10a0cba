"""
Small exact linear algebra over the rationals (Fractions only, no floats).
"""

from fractions import Fraction


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def rank(rows):
    """Rank of a matrix given as a list of row sequences (ints/Fractions)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                factor = m[i][col] / inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows):
    """Determinant of a square matrix, exact."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        result *= m[col][col]
        inv = m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                factor = m[i][col] / inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return sign * result


