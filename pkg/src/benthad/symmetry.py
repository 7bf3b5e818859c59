"""Symmetry groups of a Hadamard matrix H.

* SAut(H): monomial P with PH = HP, read off the automorphisms of
  :func:`~benthad.graphs.strong_graph`.
* C(H): its permutation part, the automorphisms of :func:`~benthad.graphs.gamma_graph`.
* C_2(H): identity and involutions of C(H); the polarities when H is symmetric.
* Aut(H): pairs (P, Q) of monomials with PHQ = H, from :func:`~benthad.graphs.pair_graph`.
  The pair (-I, -I) is counted.
* strong equivalence: K = P H P^t for a monomial P.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import sympy

from .errors import GroupTooLarge, NotSymmetric, OrderMismatch, VerificationFailure
from .graphs import automorphisms, find_isomorphism, gamma_graph, pair_graph, strong_graph
from .matrix import HadamardMatrix, MonomialMatrix
from .perm_group import PermutationGroup

POLARITY_LIMIT = 10**6


def factor_order(n: int) -> str:
    """``2^15 x 3^2 x 5 x 7`` style factorization."""
    if n == 1:
        return "1"
    parts = []
    for p, e in sorted(sympy.factorint(n).items()):
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    return " x ".join(parts)


def _commutes(p: MonomialMatrix, h: HadamardMatrix):
    e = h.entries
    return np.array_equal(p @ e, (p.T @ e.T).T)


def _decode_block_perm(perm, v, offset=0):
    """Vertex map on blocks ``(offset+2i, offset+2i+1)`` -> monomial (perm, signs by row)."""
    pi = [0] * v
    signs = [0] * v
    for i in range(v):
        a = perm[offset + 2 * i] - offset
        b = perm[offset + 2 * i + 1] - offset
        if a // 2 != b // 2 or not 0 <= a < 2 * v:
            raise VerificationFailure("automorphism does not preserve the 2-blocks")
        pi[i] = a // 2
        signs[a // 2] = 1 - 2 * (a % 2)
    return MonomialMatrix(tuple(pi), tuple(signs))


def _encode_monomial(p: MonomialMatrix):
    out = [0] * (2 * p.n)
    for i, r in enumerate(p.perm):
        flip = p.signs[r] == -1
        out[2 * i] = 2 * r + flip
        out[2 * i + 1] = 2 * r + (not flip)
    return tuple(out)


def _group_json(order, generators):
    return {
        "order": order,
        "order_factored": factor_order(order),
        "num_generators": len(generators),
        "generators": [g.to_json() for g in generators],
    }


@dataclass
class StrongAutomorphismGroup:
    """SAut(H) with monomial generators and the graph group behind them."""

    h: HadamardMatrix
    generators: list
    group: PermutationGroup

    @property
    def order(self) -> int:
        return self.group.order()

    def contains(self, p: MonomialMatrix) -> bool:
        return self.group.contains(_encode_monomial(p))

    def elements(self):
        for g in self.group.elements():
            yield _decode_block_perm(g, self.h.v)

    def to_json(self):
        return _group_json(self.order, self.generators)


def saut(h: HadamardMatrix, graph_limit=None) -> StrongAutomorphismGroup:
    """Strong automorphism group of h via the block digraph.

    Automorphisms of the block digraph never split a block (two vertices share a
    block iff their neighbourhoods are disjoint), so each one is a block
    permutation (the permutation part) composed with swaps inside blocks (the
    signs). Every decoded generator is checked against PH = HP.
    """
    res = automorphisms(strong_graph(h), canonical=False, graph_limit=graph_limit)
    gens = []
    for g in res.group.generators:
        p = _decode_block_perm(g, h.v)
        if not _commutes(p, h):
            raise VerificationFailure("decoded strong automorphism does not commute with H")
        gens.append(p)
    return StrongAutomorphismGroup(h, gens, res.group)


@dataclass
class PermutationPart:
    h: HadamardMatrix
    generators: list
    group: PermutationGroup

    @property
    def order(self) -> int:
        return self.group.order()

    def elements(self):
        for g in self.group.elements():
            yield MonomialMatrix.permutation(g)

    def to_json(self):
        return _group_json(self.order, self.generators)


def c_group(h: HadamardMatrix, graph_limit=None) -> PermutationPart:
    """Permutation matrices commuting with h: automorphisms of the (-1)-digraph."""
    res = automorphisms(gamma_graph(h), canonical=False, graph_limit=graph_limit)
    gens = []
    for g in res.group.generators:
        p = MonomialMatrix.permutation(g)
        if not _commutes(p, h):
            raise VerificationFailure("permutation does not commute with H")
        gens.append(p)
    return PermutationPart(h, gens, res.group)


@dataclass(frozen=True)
class IncidenceSystem:
    """Rows as points, columns as blocks, (i, j) incident iff ``H[i, j] == -1``."""

    points: tuple
    blocks: tuple
    flags: frozenset

    @classmethod
    def from_hadamard(cls, h: HadamardMatrix):
        flags = frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(h.entries == -1)))
        return cls(tuple(range(h.v)), tuple(range(h.v)), flags)

    def incidence_matrix(self):
        a = np.zeros((len(self.points), len(self.blocks)), dtype=np.int64)
        for i, j in self.flags:
            a[i, j] = 1
        return a

    def is_polarity(self, perm) -> bool:
        """P is a polarity iff P^t = P (an involution) and PA = A^t P."""
        p = MonomialMatrix.permutation(perm).to_array()
        a = self.incidence_matrix()
        return bool(np.array_equal(p, p.T) and np.array_equal(p @ a, a.T @ p))


def polarities(h: HadamardMatrix, limit=None, graph_limit=None):
    """Identity and involutions of C(h), as permutation tuples.

    For symmetric h these are exactly the polarities of the incidence system.
    Found by enumerating C(h) from its stabilizer chain.
    """
    if not h.symmetric:
        raise NotSymmetric("polarities are defined here for symmetric matrices only")
    cap = POLARITY_LIMIT if limit is None else limit
    grp = c_group(h, graph_limit).group
    if grp.order() > cap:
        raise GroupTooLarge(f"|C(H)| = {grp.order()} exceeds the enumeration limit {cap}")
    inc = IncidenceSystem.from_hadamard(h)
    out = []
    for g in grp.elements():
        if all(g[g[x]] == x for x in range(h.v)):
            if not inc.is_polarity(g):
                raise VerificationFailure("involution of C(H) is not a polarity")
            out.append(g)
    return sorted(out)


@dataclass
class FullAutomorphismGroup:
    h: HadamardMatrix
    generators: list  # (P, Q) pairs with P H Q = H
    group: PermutationGroup

    @property
    def order(self) -> int:
        return self.group.order()

    def to_json(self):
        return {
            "order": self.order,
            "order_factored": factor_order(self.order),
            "num_generators": len(self.generators),
            "generators": [{"P": p.to_json(), "Q": q.to_json()} for p, q in self.generators],
        }


def full_aut(h: HadamardMatrix, graph_limit=None) -> FullAutomorphismGroup:
    """Aut(h) as pairs (P, Q) with PHQ = h, including (-I, -I)."""
    v = h.v
    res = automorphisms(pair_graph(h), canonical=False, graph_limit=graph_limit)
    gens = []
    for g in res.group.generators:
        p = _decode_block_perm(g, v)
        r = _decode_block_perm(g, v, offset=2 * v)
        q = r.T
        if not np.array_equal(p @ (q.T @ h.entries.T).T, h.entries):
            raise VerificationFailure("decoded pair (P, Q) does not fix H")
        gens.append((p, q))
    return FullAutomorphismGroup(h, gens, res.group)


def full_aut_order(h: HadamardMatrix, graph_limit=None) -> int:
    return full_aut(h, graph_limit).order


def strong_equivalent(h: HadamardMatrix, k: HadamardMatrix, graph_limit=None) -> Optional[MonomialMatrix]:
    """A monomial P with P h P^t == k, or None when h and k are not strongly equivalent."""
    if h.v != k.v:
        raise OrderMismatch(f"orders differ: {h.v} != {k.v}")
    iso = find_isomorphism(strong_graph(h), strong_graph(k), graph_limit)
    if iso is None:
        return None
    p = _decode_block_perm(iso, h.v)
    if not np.array_equal(p @ (p @ h.entries).T, k.entries.T):
        raise VerificationFailure("decoded witness fails P H P^t = K")
    return p
