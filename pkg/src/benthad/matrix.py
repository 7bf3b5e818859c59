"""Hadamard matrices, monomial matrices and the standard constructions.

All arithmetic is over the integers. The normalized matrix H/sqrt(v) is never
formed; equations involving it are rescaled (``HX = 2u X`` and so on).
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._gf import GF, prime_power
from .errors import (
    BadEntry,
    BadResidueClass,
    DimensionMismatch,
    NotHadamard,
    NotSquareOrder,
    SizeLimit,
)

#: Built-in constructors refuse orders above this unless told otherwise.
MAX_ORDER = 1024


def _check_size(v, max_order):
    limit = MAX_ORDER if max_order is None else max_order
    if v > limit:
        raise SizeLimit(f"order {v} exceeds the configured maximum {limit}")


def square_root_half(v) -> Optional[int]:
    """Return u with v == 4u^2, or None."""
    if v <= 0 or v % 4:
        return None
    u = math.isqrt(v // 4)
    return u if 4 * u * u == v else None


def as_signs(x, length=None) -> np.ndarray:
    """Validate a +-1 vector and return it as an int64 array."""
    arr = np.asarray(x, dtype=np.int64)
    if arr.ndim != 1:
        raise BadEntry("sign vector must be one-dimensional")
    if not np.all((arr == 1) | (arr == -1)):
        raise BadEntry("sign vector entries must be +1 or -1")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatch(f"sign vector has length {arr.shape[0]}, expected {length}")
    return arr


def signs_to_str(x) -> str:
    return "".join("+" if s > 0 else "-" for s in x)


def str_to_signs(s: str) -> np.ndarray:
    table = {"+": 1, "-": -1}
    try:
        return np.array([table[c] for c in s], dtype=np.int64)
    except KeyError as exc:
        raise BadEntry(f"unexpected character {exc.args[0]!r} in sign string") from None


def sign_sort_key(x):
    # '+' sorts before '-'
    return tuple(int(-s) for s in x)


class HadamardMatrix:
    """A validated Hadamard matrix. Immutable.

    Attributes: ``entries`` (read-only int64 array), ``v``, ``u`` (``v == 4u^2``
    or None), ``symmetric``, ``sigma`` (common row/column sum or None).
    """

    __slots__ = ("entries", "v", "u", "symmetric", "sigma")

    def __init__(self, grid):
        arr = np.array(grid, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotHadamard("grid must be a non-empty square array")
        if not np.all((arr == 1) | (arr == -1)):
            raise BadEntry("entries must be +1 or -1")
        v = arr.shape[0]
        gram = arr @ arr.T
        if not np.array_equal(gram, v * np.eye(v, dtype=np.int64)):
            i, j = np.argwhere(gram - v * np.eye(v, dtype=np.int64))[0]
            raise NotHadamard(f"rows {i} and {j} have inner product {gram[i, j]}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "u", square_root_half(v))
        object.__setattr__(self, "symmetric", bool(np.array_equal(arr, arr.T)))
        object.__setattr__(self, "sigma", _common_sum(arr))
        if self.sigma is not None and v > 1:
            assert self.u is not None and abs(self.sigma) == 2 * self.u

    def __setattr__(self, name, value):
        raise AttributeError("HadamardMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, HadamardMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __neg__(self):
        return HadamardMatrix(-self.entries)

    def __repr__(self):
        return f"HadamardMatrix(v={self.v}, u={self.u}, symmetric={self.symmetric}, sigma={self.sigma})"

    @property
    def T(self):
        return HadamardMatrix(self.entries.T)

    def to_text(self) -> str:
        """Serialize in the ``.had`` text format."""
        rows = ("".join("+" if x > 0 else "-" for x in row) for row in self.entries)
        return f"{self.v}\n" + "".join(r + "\n" for r in rows)

    @property
    def content_hash(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def _common_sum(arr):
    rows = arr.sum(axis=1)
    cols = arr.sum(axis=0)
    s = int(rows[0])
    if np.all(rows == s) and np.all(cols == s):
        return s
    return None


def make_hadamard(grid) -> HadamardMatrix:
    return HadamardMatrix(grid)


@dataclass(frozen=True)
class MonomialMatrix:
    """Signed permutation matrix ``P = D * Pi``.

    ``P[perm[i], i] == signs[perm[i]]``: column ``i`` is sent to row
    ``perm[i]`` and ``signs`` is indexed by row.
    """

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("invalid monomial matrix data")
        if any(s not in (1, -1) for s in self.signs):
            raise BadEntry("monomial signs must be +1 or -1")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def diagonal(cls, signs):
        return cls(tuple(range(len(signs))), tuple(int(s) for s in signs))

    @classmethod
    def permutation(cls, perm):
        return cls(tuple(int(p) for p in perm), (1,) * len(perm))

    @classmethod
    def from_array(cls, arr):
        arr = np.asarray(arr)
        n = arr.shape[0]
        nz = [np.flatnonzero(arr[:, i]) for i in range(n)]
        if any(len(z) != 1 for z in nz) or not np.all(np.abs(arr) <= 1):
            raise ValueError("not a monomial matrix")
        perm = tuple(int(z[0]) for z in nz)
        signs = [0] * n
        for i, r in enumerate(perm):
            signs[r] = int(arr[r, i])
        return cls(perm, tuple(signs))

    @classmethod
    def random(cls, n, rng):
        perm = tuple(int(p) for p in rng.permutation(n))
        signs = tuple(int(s) for s in rng.choice([1, -1], size=n))
        return cls(perm, signs)

    @property
    def n(self):
        return len(self.perm)

    def to_array(self):
        out = np.zeros((self.n, self.n), dtype=np.int64)
        for i, r in enumerate(self.perm):
            out[r, i] = self.signs[r]
        return out

    @property
    def T(self):
        inv = [0] * self.n
        for i, r in enumerate(self.perm):
            inv[r] = i
        return MonomialMatrix(tuple(inv), tuple(self.signs[r] for r in self.perm))

    inverse = T

    def __matmul__(self, other):
        if isinstance(other, MonomialMatrix):
            if other.n != self.n:
                raise DimensionMismatch("monomial sizes differ")
            inv = [0] * self.n
            for i, r in enumerate(self.perm):
                inv[r] = i
            perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
            signs = tuple(self.signs[r] * other.signs[inv[r]] for r in range(self.n))
            return MonomialMatrix(perm, signs)
        arr = np.asarray(other)
        if arr.shape[0] != self.n:
            raise DimensionMismatch("monomial size does not match operand")
        out = np.empty_like(arr)
        out[list(self.perm)] = arr
        return out * np.asarray(self.signs).reshape((-1,) + (1,) * (arr.ndim - 1))

    def is_identity(self):
        return self.perm == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def to_json(self):
        return {"perm": list(self.perm), "signs": list(self.signs)}


def sylvester(h: int, max_order=None) -> HadamardMatrix:
    """The Sylvester matrix of order 2^h, rows indexed by binary vectors in lex order."""
    if h < 0:
        raise ValueError("h must be non-negative")
    _check_size(2**h, max_order)
    idx = np.arange(2**h)
    parity = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    return HadamardMatrix(1 - 2 * parity.astype(np.int64))


def paley(q: int, kind: str = "I", max_order=None) -> HadamardMatrix:
    """Paley construction over GF(q).

    ``kind="I"`` (q = 3 mod 4): ``I + [[0, j^t], [-j, Q]]``, order q+1.
    ``kind="II"`` (q = 1 mod 4): ``C (x) [[1,1],[1,-1]] + I (x) [[1,-1],[-1,-1]]``
    with ``C = [[0, j^t], [j, Q]]``, order 2(q+1), symmetric.
    ``Q[a][b] = chi(a - b)`` with chi the quadratic character and field
    elements ordered as described in :mod:`benthad._gf`.
    """
    kind = str(kind).upper()
    if kind not in ("I", "II"):
        raise ValueError("kind must be 'I' or 'II'")
    want = 3 if kind == "I" else 1
    if q % 4 != want:
        raise BadResidueClass(f"Paley {kind} needs q = {want} mod 4, got q = {q}")
    prime_power(q)
    _check_size(q + 1 if kind == "I" else 2 * (q + 1), max_order)
    field = GF(q)
    chi = field.quadratic_character()
    jac = np.array([[chi[field.sub(a, b)] for b in range(q)] for a in range(q)], dtype=np.int64)
    core = np.zeros((q + 1, q + 1), dtype=np.int64)
    core[0, 1:] = 1
    core[1:, 1:] = jac
    if kind == "I":
        core[1:, 0] = -1
        return HadamardMatrix(np.eye(q + 1, dtype=np.int64) + core)
    core[1:, 0] = 1
    s2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    diag = np.array([[1, -1], [-1, -1]], dtype=np.int64)
    return HadamardMatrix(np.kron(core, s2) + np.kron(np.eye(q + 1, dtype=np.int64), diag))


def kronecker(a: HadamardMatrix, b: HadamardMatrix, max_order=None) -> HadamardMatrix:
    """Kronecker product; pair (i, j) is index ``i * b.v + j``."""
    _check_size(a.v * b.v, max_order)
    return HadamardMatrix(np.kron(a.entries, b.entries))


def normalize(h: HadamardMatrix):
    """Return ``(H', (D_r, D_c))`` with ``H' = D_r H D_c`` normalized."""
    col = MonomialMatrix.diagonal(h.entries[0])
    h1 = h.entries * h.entries[0][None, :]
    row = MonomialMatrix.diagonal(h1[:, 0])
    return HadamardMatrix(h1 * h1[:, 0][:, None]), (row, col)


def regularity(h: HadamardMatrix) -> Optional[int]:
    return h.sigma


def bush_check(h: HadamardMatrix) -> bool:
    """True iff h is Bush-type with its 2u x 2u blocks taken in natural order."""
    if h.u is None:
        raise NotSquareOrder(f"order {h.v} is not of the form 4u^2")
    side = 2 * h.u
    blocks = h.entries.reshape(side, side, side, side).swapaxes(1, 2)
    for i in range(side):
        for j in range(side):
            blk = blocks[i, j]
            if i == j:
                if not np.all(blk == 1):
                    return False
            elif np.any(blk.sum(axis=0)) or np.any(blk.sum(axis=1)):
                return False
    return True


def apply_monomial(p: MonomialMatrix, q: MonomialMatrix, h: HadamardMatrix) -> HadamardMatrix:
    """Return ``P H Q``."""
    if p.n != h.v or q.n != h.v:
        raise DimensionMismatch("monomial size does not match matrix order")
    return HadamardMatrix(p @ (q.T @ h.entries.T).T)


def sylvester_form(form, max_order=None) -> HadamardMatrix:
    """Sylvester-type matrix ``H[x, y] = (-1)^(x^t M y)`` for a binary m x m matrix M.

    Indices are read as binary vectors, most significant bit first, so the
    identity form gives :func:`sylvester`. M must be invertible over GF(2).
    """
    m_arr = np.asarray(form, dtype=np.int64) % 2
    m = m_arr.shape[0]
    _check_size(2**m, max_order)
    bits = (np.arange(2**m)[:, None] >> np.arange(m - 1, -1, -1)) & 1
    return HadamardMatrix(1 - 2 * ((bits @ m_arr @ bits.T) % 2))


def symplectic_form(m):
    """The standard alternating form on GF(2)^m (m even): pairs (1,2), (3,4), ..."""
    if m % 2:
        raise ValueError("an alternating nondegenerate form needs even m")
    out = np.zeros((m, m), dtype=np.int64)
    for i in range(0, m, 2):
        out[i, i + 1] = out[i + 1, i] = 1
    return out
