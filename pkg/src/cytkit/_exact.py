"""Small exact linear algebra over ``Fraction``.

Matrices are lists of rows.  Nothing here is clever; sizes are tiny.
"""

from fractions import Fraction


def as_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = as_fraction_matrix(rows)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1]) if rows else 0


def solve(a, b):
    """Solve ``a x = b`` exactly.

    Returns the unique solution, or ``None`` if the system is inconsistent.
    Raises ``ValueError`` if the solution is not unique.
    """
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise ValueError("system is underdetermined")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    return x


def inverse(a):
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def det(a):
    """Determinant by fraction-valued Gaussian elimination."""
    m = as_fraction_matrix(a)
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]
