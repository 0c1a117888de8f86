"""Small exact linear algebra over the rationals (Gaussian elimination on Fractions)."""
from fractions import Fraction
from math import gcd, lcm


def integer_row(row):
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    row = [Fraction(x) for x in row]
    den = lcm(*(x.denominator for x in row)) if row else 1
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), 0)


def rref(rows):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def solve(columns, target):
    """Unique ``c`` with ``sum_k c_k * columns[k] == target``, or ``None``.

    ``columns`` must be linearly independent; ``None`` means ``target`` is not in their span.
    """
    k = len(columns)
    d = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(d)]
    m, pivots = rref(aug)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    return [m[i][k] for i in range(k)]


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}``."""
    m, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(x)
    return basis
