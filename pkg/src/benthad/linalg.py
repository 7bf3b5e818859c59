"""Exact linear algebra over the rationals.

Matrices are plain lists of rows holding ``Fraction`` (or ``int``) entries.
Nothing here touches floating point.
"""
from fractions import Fraction

from .errors import SingularMatrix


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form. Returns ``(R, pivots)`` with zero rows dropped."""
    m = to_fractions(rows)
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(n_rows):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [a - f * b for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def kernel_basis(rows, n_cols=None):
    """Row basis of the right kernel {x : M x = 0}, itself in reduced echelon form.

    Each basis vector has a 1 at one free column and zeros at the other free
    columns; stacking them and row-reducing gives a canonical basis.
    """
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    n_cols = len(rows[0])
    R, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    if not basis:
        return []
    return rref(basis)[0]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def columns(rows, cols):
    return [[row[c] for c in cols] for row in rows]


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(to_fractions(rows))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def det(rows):
    """Determinant by fraction-exact elimination."""
    m = to_fractions(rows)
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d
