"""Extended affine transforms of Boolean functions and the orthogonal groups O_m.

A point x of GF(2)^m is the integer whose binary digits, most significant
first, are x_1..x_m; this matches the row order of :func:`benthad.matrix.sylvester`.
A transform ``T(A, b, d, c)`` sends the sign function F to

    G(x) = F(A^-1 x + A^-1 b) * (-1)^<d, x> * c

which is a monomial matrix acting on sign vectors of length 2^m.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .errors import DimensionMismatch, SingularMatrix, SizeLimit, VerificationFailure
from .matrix import MonomialMatrix, as_signs, sylvester

ORTH_LIMIT = 5


def gf2_inverse(a):
    a = np.asarray(a, dtype=np.int64) % 2
    m = a.shape[0]
    aug = np.concatenate([a, np.eye(m, dtype=np.int64)], axis=1)
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r, col]), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible over GF(2)")
        aug[[col, piv]] = aug[[piv, col]]
        for r in range(m):
            if r != col and aug[r, col]:
                aug[r] ^= aug[col]
    return aug[:, m:]


def _points(m):
    return (np.arange(2**m)[:, None] >> np.arange(m - 1, -1, -1)) & 1


def _index(vecs):
    m = vecs.shape[-1]
    return vecs @ (1 << np.arange(m - 1, -1, -1))


@dataclass(frozen=True)
class ExtendedAffineTransform:
    A: tuple
    b: tuple
    d: tuple
    c: int = 1

    def __post_init__(self):
        m = len(self.A)
        if len(self.b) != m or len(self.d) != m or self.c not in (1, -1):
            raise DimensionMismatch("inconsistent transform data")
        gf2_inverse(np.array(self.A))

    @classmethod
    def make(cls, A, b=None, d=None, c=1):
        A = np.asarray(A, dtype=np.int64) % 2
        m = A.shape[0]
        b = np.zeros(m, np.int64) if b is None else np.asarray(b) % 2
        d = np.zeros(m, np.int64) if d is None else np.asarray(d) % 2
        return cls(tuple(map(tuple, A.tolist())), tuple(int(x) for x in b), tuple(int(x) for x in d), int(c))

    @property
    def m(self):
        return len(self.A)

    def monomial(self) -> MonomialMatrix:
        """The matrix M(T) with ``M(T) @ F == apply_eat(T, F)``."""
        A = np.array(self.A)
        pts = _points(self.m)
        # F[y] lands at x = A y + b
        perm = _index((pts @ A.T + np.array(self.b)) % 2)
        signs = self.c * (1 - 2 * ((pts @ np.array(self.d)) % 2))
        return MonomialMatrix(tuple(int(p) for p in perm), tuple(int(s) for s in signs))

    def walsh_partner(self):
        """The transform T' with ``S_v M(T) = M(T') S_v``."""
        A_inv_t = gf2_inverse(np.array(self.A)).T
        bd = sum(x * y for x, y in zip(self.b, self.d)) % 2
        return ExtendedAffineTransform.make(A_inv_t, self.d, self.b, self.c * (-1) ** bd)


def apply_eat(t: ExtendedAffineTransform, f):
    f = as_signs(f)
    if len(f) != 2**t.m:
        raise DimensionMismatch(f"sign vector length {len(f)} is not 2^{t.m}")
    A_inv = gf2_inverse(np.array(t.A))
    pts = _points(t.m)
    src = _index(((pts + np.array(t.b)) % 2) @ A_inv.T % 2)
    return f[src] * (1 - 2 * ((pts @ np.array(t.d)) % 2)) * t.c


def eat_in_saut(t: ExtendedAffineTransform) -> bool:
    """Whether M(T) commutes with the Sylvester matrix of order 2^m.

    Decided by the closed criterion (A orthogonal, b == d, even weight of b)
    and cross-checked against the matrix identity.
    """
    A = np.array(t.A)
    predicate = bool(
        np.array_equal(A @ A.T % 2, np.eye(t.m, dtype=np.int64))
        and t.b == t.d
        and sum(t.b) % 2 == 0
    )
    s = sylvester(t.m).entries
    m_t = t.monomial()
    direct = bool(np.array_equal(m_t @ s, (m_t.T @ s.T).T))
    if predicate != direct:
        raise VerificationFailure("closed criterion and direct commutation test disagree")
    return predicate


def orth_group(m, limit=None):
    """All m x m binary matrices with A A^t = I, by row-wise backtracking.

    Rows must have odd weight and be pairwise orthogonal. Returns
    ``(matrices, count)``.
    """
    cap = ORTH_LIMIT if limit is None else limit
    if m > cap:
        raise SizeLimit(f"full enumeration of O_{m} exceeds limit m <= {cap}")
    odd = [np.array(v) for v in product((0, 1), repeat=m) if sum(v) % 2]
    out = []

    def extend(rows):
        if len(rows) == m:
            out.append(np.array(rows))
            return
        for v in odd:
            if all((v @ r) % 2 == 0 for r in rows):
                extend(rows + [v])

    extend([])
    return out, len(out)


def orth_group_order(m) -> int:
    """Closed formula for |O_m| over GF(2)."""
    k = m // 2
    top = k if m % 2 else k - 1
    return 2 ** (k * k) * prod(2 ** (2 * i) - 1 for i in range(1, top + 1))


def gl2(m):
    """Every invertible m x m matrix over GF(2) (small m only)."""
    out = []
    for bits in product((0, 1), repeat=m * m):
        a = np.array(bits, dtype=np.int64).reshape(m, m)
        try:
            gf2_inverse(a)
        except SingularMatrix:
            continue
        out.append(a)
    return out


def saut_transforms(m, limit=None):
    """Every transform (A, b, b, c) with A in O_m and b of even weight.

    Each is confirmed to commute with the Sylvester matrix of order 2^m;
    there are ``|O_m| * 2^m`` of them.
    """
    mats, _ = orth_group(m, limit)
    evens = [b for b in product((0, 1), repeat=m) if sum(b) % 2 == 0]
    out = []
    for A in mats:
        for b in evens:
            for c in (1, -1):
                t = ExtendedAffineTransform.make(A, b, b, c)
                if not eat_in_saut(t):
                    raise VerificationFailure("corollary transform fails to commute")
                out.append(t)
    return out
