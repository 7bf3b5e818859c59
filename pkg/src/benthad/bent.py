"""Bent and self-dual bent sequences attached to a Hadamard matrix.

A sign vector X is bent for H (order v = 4u^2) when every entry of HX is
+-2u; its dual is Y = HX / 2u, and X is self-dual when Y == X.

Two search engines are provided. ``search_exhaustive`` scans all of {+-1}^v
with bit-packed rows. ``search_eigenspace`` enumerates sign patterns on k
coordinates of the eigenvalue-2u eigenspace of H and keeps the lifts that land
in {+-1}^v. They must agree wherever both run.
"""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    EmptyEigenspace,
    NotBent,
    NotSelfDual,
    NotSquareOrder,
    SizeLimit,
)
from .matrix import HadamardMatrix, MonomialMatrix, as_signs, kronecker, sign_sort_key, signs_to_str

EXHAUST_LIMIT = 24
K_LIMIT = 30
_CHUNK = 1 << 16


def _require_square(h: HadamardMatrix) -> int:
    if h.u is None:
        raise NotSquareOrder(f"order {h.v} is not an even perfect square; no bent sequences exist")
    return h.u


def default_threads():
    env = os.environ.get("BENTHAD_THREADS")
    return max(1, int(env)) if env else 1


class Duality(NamedTuple):
    bent: bool
    dual: Optional[np.ndarray]
    self_dual: bool


def dual(h: HadamardMatrix, x) -> Duality:
    u = _require_square(h)
    x = as_signs(x, h.v)
    hx = h.entries @ x
    if not np.all(np.abs(hx) == 2 * u):
        return Duality(False, None, False)
    y = hx // (2 * u)
    # y is bent for H^t with dual x
    assert np.array_equal(h.entries.T @ y, 2 * u * x)
    return Duality(True, y, bool(np.array_equal(y, x)))


def is_bent(h, x) -> bool:
    return dual(h, x).bent


def is_self_dual_bent(h, x) -> bool:
    return dual(h, x).self_dual


@dataclass
class SearchResult:
    """Sorted, duplicate-free solutions of one search.

    ``sequences`` is an int64 array of shape (count, v), rows ordered
    lexicographically with + before -.
    """

    sequences: np.ndarray
    method: str
    v: int
    k: Optional[int] = None
    candidates: int = 0
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def count(self):
        return int(self.sequences.shape[0])

    def as_strings(self):
        return [signs_to_str(x) for x in self.sequences]

    def as_set(self):
        return {tuple(int(s) for s in x) for x in self.sequences}

    def to_json(self, matrix_id=None):
        return {
            "matrix_id": matrix_id,
            "method": self.method,
            "v": self.v,
            "k": self.k,
            "count": self.count,
            "sequences": self.as_strings(),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _sorted_unique(rows, v):
    if not len(rows):
        return np.zeros((0, v), dtype=np.int64)
    uniq = {tuple(int(s) for s in r) for r in rows}
    return np.array(sorted(uniq, key=sign_sort_key), dtype=np.int64).reshape(-1, v)


def _run_chunks(fn, total, threads):
    bounds = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if threads <= 1 or len(bounds) == 1:
        return [fn(a, b) for a, b in bounds]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda ab: fn(*ab), bounds))


def _packed_rows(h):
    # bit (v-1-j) set where row entry j is -1, so integer order == sign order
    v = h.v
    weights = np.uint64(1) << np.arange(v - 1, -1, -1, dtype=np.uint64)
    return [np.uint64(int(((row < 0).astype(np.uint64) * weights).sum())) for row in h.entries]


def _unpack(ints, v):
    bits = (ints[:, None] >> np.arange(v - 1, -1, -1, dtype=np.uint64)) & np.uint64(1)
    return 1 - 2 * bits.astype(np.int64)


def search_exhaustive(h: HadamardMatrix, mode="self_dual", exhaust_limit=None, threads=None) -> SearchResult:
    """All bent (``mode="bent"``) or self-dual bent sequences, by scanning {+-1}^v.

    Exponential in v: refused above ``exhaust_limit`` (default 24).
    Row dot products come from ``v - 2 * popcount(row ^ x)``.
    """
    if mode not in ("bent", "self_dual"):
        raise ValueError("mode must be 'bent' or 'self_dual'")
    u = _require_square(h)
    limit = EXHAUST_LIMIT if exhaust_limit is None else exhaust_limit
    v = h.v
    if v > limit:
        raise SizeLimit(f"exhaustive search is exponential in v; v={v} exceeds limit {limit}")
    threads = threads or default_threads()
    rows = _packed_rows(h)
    two_u = 2 * u
    t0 = time.perf_counter()

    def work(start, stop):
        xs = np.arange(start, stop, dtype=np.uint64)
        for i, row in enumerate(rows):
            dot = v - 2 * np.bitwise_count(xs ^ row).astype(np.int64)
            if mode == "self_dual":
                xi = 1 - 2 * ((xs >> np.uint64(v - 1 - i)) & np.uint64(1)).astype(np.int64)
                xs = xs[dot == two_u * xi]
            else:
                xs = xs[np.abs(dot) == two_u]
            if not len(xs):
                break
        return xs

    found = np.concatenate(_run_chunks(work, 1 << v, threads))
    found.sort()
    return SearchResult(
        sequences=_unpack(found, v),
        method="exhaust",
        v=v,
        candidates=1 << v,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
        extra={"mode": mode},
    )


class MinorSelection(NamedTuple):
    columns: list
    first_column_zero: bool


def greedy_minor(b) -> MinorSelection:
    """Pick k columns of the k x v matrix ``b`` forming an invertible minor.

    Columns are scanned left to right and kept iff they raise the rank of the
    selection, stopping once the selection reaches rank(b). A zero first
    column is skipped and flagged: every vector in the row space then has
    first coordinate 0, so no sign vector lies in it.
    """
    b = linalg.to_fractions(b)
    k = len(b)
    if k == 0:
        raise ValueError("empty basis")
    target = linalg.rank(b)
    first_zero = all(row[0] == 0 for row in b)
    echelon = []  # (pivot_index, vector)
    chosen = []
    for col in range(len(b[0])):
        vec = [row[col] for row in b]
        for piv, e in echelon:
            if vec[piv]:
                f = vec[piv] / e[piv]
                vec = [a - f * c for a, c in zip(vec, e)]
        piv = next((i for i, a in enumerate(vec) if a), None)
        if piv is None:
            continue
        echelon.append((piv, vec))
        chosen.append(col)
        if len(chosen) == target:
            break
    return MinorSelection(chosen, first_zero)


@dataclass(frozen=True)
class EigenBasis:
    """Exact basis of ker(H - 2uI) with a chosen invertible k x k minor."""

    basis: tuple  # k rows of Fractions, reduced echelon form
    k: int
    columns: tuple
    minor_inverse: tuple
    first_column_zero: bool

    def lift_matrix(self):
        """``Bk^-1 B``: its rows express a kernel vector from its values on ``columns``."""
        return linalg.matmul(self.minor_inverse, self.basis)


def eigenspace_basis(h: HadamardMatrix) -> EigenBasis:
    u = _require_square(h)
    shifted = (h.entries - 2 * u * np.eye(h.v, dtype=np.int64)).tolist()
    basis = linalg.kernel_basis(shifted)
    if not basis:
        raise EmptyEigenspace(f"2u = {2 * u} is not an eigenvalue of H")
    sel = greedy_minor(basis)
    inv = linalg.inverse(linalg.columns(basis, sel.columns))
    return EigenBasis(
        basis=tuple(tuple(r) for r in basis),
        k=len(basis),
        columns=tuple(sel.columns),
        minor_inverse=tuple(tuple(r) for r in inv),
        first_column_zero=sel.first_column_zero,
    )


def search_eigenspace(h: HadamardMatrix, k_limit=None, threads=None) -> SearchResult:
    """Self-dual bent sequences via the eigenvalue-2u eigenspace.

    For every Z in {+-1}^k with its first entry fixed to +1, X = Z Bk^-1 B is
    the unique kernel vector agreeing with Z on the chosen columns; it is kept
    iff its other v - k entries are exactly +-1. Negation restores the half
    with first entry -1. All arithmetic is exact: the lift matrix is scaled to
    integers by the lcm of its denominators.
    """
    t0 = time.perf_counter()
    eb = eigenspace_basis(h)
    limit = K_LIMIT if k_limit is None else k_limit
    k, v = eb.k, h.v
    if k > limit:
        raise DimensionTooLarge(f"eigenspace dimension {k} exceeds limit {limit}")
    empty = np.zeros((0, v), dtype=np.int64)
    if eb.first_column_zero:
        return SearchResult(empty, "eigen", v, k, 0, (time.perf_counter() - t0) * 1e3,
                            {"first_column_zero": True})
    lift = eb.lift_matrix()
    den = math.lcm(*(Fraction(x).denominator for row in lift for x in row))
    num = [[int(Fraction(x) * den) for x in row] for row in lift]
    rest = [c for c in range(v) if c not in set(eb.columns)]
    bound = sum(max(abs(num[i][c]) for c in range(v)) for i in range(k)) if rest else 0
    dtype = np.int64 if bound < 2**62 else object
    n_rest = np.array([[num[i][c] for c in rest] for i in range(k)], dtype=dtype)
    n_full = np.array(num, dtype=dtype)
    threads = threads or default_threads()

    def work(start, stop):
        t = np.arange(start, stop, dtype=np.int64)
        bits = (t[:, None] >> np.arange(k - 2, -1, -1, dtype=np.int64)) & 1 if k > 1 else np.zeros((len(t), 0), np.int64)
        z = np.concatenate([np.ones((len(t), 1), np.int64), 1 - 2 * bits], axis=1).astype(dtype)
        vals = z @ n_rest
        ok = np.all((vals == den) | (vals == -den), axis=1) if rest else np.ones(len(t), bool)
        return (z[ok] @ n_full) // den

    half = 1 << (k - 1)
    parts = [p for p in _run_chunks(work, half, threads) if len(p)]
    found = np.concatenate(parts).astype(np.int64) if parts else empty
    seqs = _sorted_unique(np.concatenate([found, -found]) if len(found) else found, v)
    return SearchResult(seqs, "eigen", v, k, half, (time.perf_counter() - t0) * 1e3,
                        {"columns": list(eb.columns), "denominator": den})


def selfdualize(h: HadamardMatrix, x):
    """Return ``(S, S H)`` with S diagonal such that x is self-dual for ``S H``."""
    x = as_signs(x, h.v)
    d = dual(h, x)
    if not d.bent:
        raise NotBent("sequence is not bent for this matrix")
    s = MonomialMatrix.diagonal(d.dual * x)
    h2 = HadamardMatrix(s @ h.entries)
    assert dual(h2, x).self_dual
    return s, h2


class HadamardCode:
    """The 2v words formed by the columns of H and their negations."""

    def __init__(self, h: HadamardMatrix):
        cols = h.entries.T
        self.codewords = np.concatenate([cols, -cols])
        self.v = h.v

    def __len__(self):
        return len(self.codewords)

    def distances(self, x):
        x = as_signs(x, self.v)
        return np.count_nonzero(self.codewords != x[None, :], axis=1)

    def min_distance_to(self, x) -> int:
        return int(self.distances(x).min())


def covering_distance(h: HadamardMatrix, x) -> int:
    """Hamming distance from x to the nearest word of the Hadamard code of h."""
    _require_square(h)
    return HadamardCode(h).min_distance_to(x)


def covering_radius(h: HadamardMatrix) -> int:
    """The value (v - sqrt v)/2 attained exactly by bent sequences."""
    u = _require_square(h)
    return (h.v - 2 * u) // 2


def kron_seq(x, y, left: Optional[HadamardMatrix] = None, right: Optional[HadamardMatrix] = None):
    """``x (x) y`` with pair (i, j) at index ``i * len(y) + j``.

    When the matrices are given, both factors are checked self-dual and the
    product is verified self-dual for ``left (x) right``.
    """
    x, y = as_signs(x), as_signs(y)
    if (left is None) != (right is None):
        raise ValueError("pass both matrices or neither")
    if left is not None:
        if len(x) != left.v or len(y) != right.v:
            raise DimensionMismatch("sequence lengths do not match matrix orders")
        if not is_self_dual_bent(left, x) or not is_self_dual_bent(right, y):
            raise NotSelfDual("factors must be self-dual bent for their matrices")
    prod = np.kron(x, y)
    if left is not None:
        assert is_self_dual_bent(kronecker(left, right), prod)
    return prod
