"""Vertex-colored digraphs, their automorphism groups and canonical forms.

The search is individualization-refinement. Each tree node is an ordered
partition refined to equitability by in/out neighbour counts into every cell
(plus the cell of the block partner when blocks are given). Cells are numbered
by sorting the count signatures, so every step is label-independent. The
target cell is the first smallest non-singleton cell.

Automorphisms come from a first-path search: for each level of the first
path, every target-cell vertex outside the known orbit of the path vertex is
individualized and its subtree searched for a leaf giving the same permuted
graph as the first leaf. Node invariants (the quotient matrix of the
equitable partition) prune subtrees that cannot contain such a leaf. The
canonical form is the largest (invariant sequence, leaf graph) over the tree,
with children pruned by orbits of known automorphisms fixing the prefix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import SizeLimit
from .perm_group import PermutationGroup

GRAPH_LIMIT = 1000


@dataclass(frozen=True)
class ColoredDigraph:
    """``n`` vertices ``0..n-1``, an arc set, a color per vertex, optional 2-blocks."""

    n: int
    arcs: frozenset
    colors: tuple
    blocks: Optional[tuple] = None

    def __post_init__(self):
        if len(self.colors) != self.n:
            raise ValueError("one color per vertex is required")
        if any(not (0 <= a < self.n and 0 <= b < self.n) for a, b in self.arcs):
            raise ValueError("arc endpoint out of range")
        if self.blocks is not None:
            flat = sorted(x for blk in self.blocks for x in blk)
            if flat != list(range(self.n)) or any(len(b) != 2 for b in self.blocks):
                raise ValueError("blocks must partition the vertices into pairs")

    @classmethod
    def from_adjacency(cls, adj, colors=None, blocks=None):
        adj = np.asarray(adj)
        n = adj.shape[0]
        arcs = frozenset((int(a), int(b)) for a, b in zip(*np.nonzero(adj)))
        colors = tuple(int(c) for c in colors) if colors is not None else (0,) * n
        return cls(n, arcs, colors, None if blocks is None else tuple(tuple(b) for b in blocks))

    def adjacency(self):
        adj = np.zeros((self.n, self.n), dtype=np.int32)
        for a, b in self.arcs:
            adj[a, b] = 1
        return adj

    def partner(self):
        if self.blocks is None:
            return None
        out = [0] * self.n
        for a, b in self.blocks:
            out[a], out[b] = b, a
        return out

    def relabel(self, perm):
        """The image graph under vertex map ``x -> perm[x]``."""
        perm = [int(p) for p in perm]
        colors = [0] * self.n
        for x, c in enumerate(self.colors):
            colors[perm[x]] = c
        blocks = None
        if self.blocks is not None:
            blocks = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in self.blocks))
        return ColoredDigraph(self.n, frozenset((perm[a], perm[b]) for a, b in self.arcs), tuple(colors), blocks)

    def is_automorphism(self, perm):
        if any(self.colors[x] != self.colors[perm[x]] for x in range(self.n)):
            return False
        if self.blocks is not None:
            pr = self.partner()
            if any(perm[pr[x]] != pr[perm[x]] for x in range(self.n)):
                return False
        return all((perm[a], perm[b]) in self.arcs for a, b in self.arcs)


def strong_graph(h):
    """Digraph on 2v vertices: entry +1 -> identity block, -1 -> swap block.

    Vertex ``2i + s`` stands for row/column i with sign bit s; arc
    ``(2i+s) -> (2j+t)`` iff ``(-1)^(s+t) == H[i, j]``.
    """
    e = np.asarray(h.entries)
    v = e.shape[0]
    s = np.array([0, 1])
    sign = 1 - 2 * ((s[:, None] + s[None, :]) % 2)  # [[1,-1],[-1,1]]
    adj = (e[:, None, :, None] == sign[None, :, None, :]).reshape(2 * v, 2 * v)
    return ColoredDigraph.from_adjacency(adj, blocks=[(2 * i, 2 * i + 1) for i in range(v)])


def gamma_graph(h):
    """Digraph on v vertices with an arc (i, j) iff ``H[i, j] == -1``."""
    return ColoredDigraph.from_adjacency(np.asarray(h.entries) == -1)


def pair_graph(h):
    """Bipartite encoding used for the full automorphism group.

    Rows r_i^+, r_i^- are vertices ``2i, 2i+1``; columns c_j^+, c_j^- are
    ``2v + 2j, 2v + 2j + 1``. r_i^s -- c_j^t (both arc directions) iff
    ``s * t * H[i, j] == 1``. Rows have color 0, columns color 1; antipodes
    form the blocks.
    """
    e = np.asarray(h.entries)
    v = e.shape[0]
    sgn = np.array([1, -1])
    rc = (sgn[None, :, None, None] * sgn[None, None, None, :] * e[:, None, :, None] == 1).reshape(2 * v, 2 * v)
    adj = np.zeros((4 * v, 4 * v), dtype=bool)
    adj[: 2 * v, 2 * v :] = rc
    adj[2 * v :, : 2 * v] = rc.T
    colors = [0] * (2 * v) + [1] * (2 * v)
    return ColoredDigraph.from_adjacency(adj, colors, [(2 * i, 2 * i + 1) for i in range(2 * v)])


class _Search:
    def __init__(self, g: ColoredDigraph):
        self.g = g
        self.n = g.n
        self.adj = g.adjacency()
        self.adj_t = np.ascontiguousarray(self.adj.T)
        partner = g.partner()
        self.partner = None if partner is None else np.array(partner)
        self.nodes = 0
        self.generators = []

    # -- partitions ---------------------------------------------------------
    def refine(self, cells):
        """Equitable refinement of an ordered partition (cell ids per vertex)."""
        _, cells = np.unique(cells, return_inverse=True)
        cells = cells.ravel()
        self.nodes += 1
        while True:
            c = int(cells.max()) + 1
            order = np.argsort(cells, kind="stable")
            starts = np.searchsorted(cells[order], np.arange(c))
            out = np.add.reduceat(self.adj[:, order], starts, axis=1)
            inn = np.add.reduceat(self.adj_t[:, order], starts, axis=1)
            parts = [cells[:, None], out, inn]
            if self.partner is not None:
                parts.append(cells[self.partner][:, None])
            # big-endian bytes sort like the integer rows they encode
            key = np.hstack(parts).astype(">i4")
            rows = [r.tobytes() for r in key]
            uniq = sorted(set(rows))
            if len(uniq) == c:
                return cells, (c, b"".join(uniq))
            rank = {r: i for i, r in enumerate(uniq)}
            cells = np.array([rank[r] for r in rows])

    @staticmethod
    def individualize(cells, w):
        out = 2 * cells + 1
        out[w] -= 1
        return out

    def target_cell(self, cells):
        counts = np.bincount(cells)
        best = None
        for cid, size in enumerate(counts):
            if size > 1 and (best is None or size < counts[best]):
                best = cid
        if best is None:
            return None
        return [int(x) for x in np.flatnonzero(cells == best)]

    def certificate(self, cells):
        lam = cells
        m = np.zeros_like(self.adj)
        m[np.ix_(lam, lam)] = self.adj
        cert = m.tobytes()
        if self.partner is not None:
            pp = np.empty(self.n, dtype=np.int64)
            pp[lam] = lam[self.partner]
            cert += pp.tobytes()
        return cert

    # -- automorphism group -------------------------------------------------
    def run(self):
        initial = np.array(self.g.colors)
        cells, inv = self.refine(initial)
        path = []  # (cells, invariant, target cell)
        while True:
            tc = self.target_cell(cells)
            path.append((cells, inv, tc))
            if tc is None:
                break
            cells, inv = self.refine(self.individualize(cells, tc[0]))
        leaf_cells = path[-1][0]
        self.first_cert = self.certificate(leaf_cells)
        self.first_inv_lam = np.argsort(leaf_cells)
        self.path_invs = [p[1] for p in path]
        self.first_path = [p[2][0] for p in path[:-1]]

        gens = self.generators = []
        level_of = []  # level at which each generator was found
        orbit_sizes = []
        for i in range(len(path) - 2, -1, -1):
            cells_i, _, tc = path[i]
            vi = tc[0]
            prefix = self.first_path[:i]
            active = [g for g, lv in zip(gens, level_of) if lv >= i]
            uf = _UnionFind(self.n)
            for g in active:
                uf.add_perm(g)
            failed = set()
            for w in tc[1:]:
                if uf.find(w) == uf.find(vi) or uf.find(w) in failed:
                    continue
                perm = self._find(cells_i, w, i + 1, prefix + [w])
                if perm is None:
                    failed.add(uf.find(w))
                    continue
                gens.append(perm)
                level_of.append(i)
                uf.add_perm(perm)
                failed = {uf.find(x) for x in failed}
            orbit_sizes.append(sum(1 for w in tc if uf.find(w) == uf.find(vi)))
        self.orbit_product = 1
        for s in orbit_sizes:
            self.orbit_product *= s
        return gens

    def _find(self, cells, w, depth, prefix):
        cells, inv = self.refine(self.individualize(cells, w))
        if depth >= len(self.path_invs) or inv != self.path_invs[depth]:
            return None
        tc = self.target_cell(cells)
        if tc is None:
            if self.certificate(cells) != self.first_cert:
                return None
            perm = tuple(int(x) for x in self.first_inv_lam[cells])
            assert self.g.is_automorphism(perm)
            return perm
        for u in self._orbit_reps(tc, prefix):
            perm = self._find(cells, u, depth + 1, prefix + [u])
            if perm is not None:
                return perm
        return None

    def _orbit_reps(self, tc, prefix):
        uf = _UnionFind(self.n)
        for g in self.generators:
            if all(g[x] == x for x in prefix):
                uf.add_perm(g)
        seen, reps = set(), []
        for x in tc:
            r = uf.find(x)
            if r not in seen:
                seen.add(r)
                reps.append(x)
        return reps

    # -- canonical form -----------------------------------------------------
    def canonical(self):
        self.best = None
        cells, inv = self.refine(np.array(self.g.colors))
        self._canon(cells, [inv], [])
        key, lam = self.best
        return key[-1][1], lam

    def _canon(self, cells, seq, prefix):
        if self.best is not None:
            ref = self.best[0][: len(seq)]
            if seq < ref:
                return
        tc = self.target_cell(cells)
        if tc is None:
            key = seq + [(-1, self.certificate(cells))]
            if self.best is None or key > self.best[0]:
                self.best = (key, cells.copy())
            return
        for u in self._orbit_reps(tc, prefix):
            c2, inv2 = self.refine(self.individualize(cells, u))
            self._canon(c2, seq + [inv2], prefix + [u])


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def add_perm(self, perm):
        for x, y in enumerate(perm):
            a, b = self.find(x), self.find(y)
            if a != b:
                self.parent[max(a, b)] = min(a, b)


@dataclass
class AutomorphismResult:
    group: PermutationGroup
    canonical_form: Optional[bytes]
    canonical_labeling: Optional[tuple]
    search_nodes: int


def automorphisms(g: ColoredDigraph, canonical=True, graph_limit=None) -> AutomorphismResult:
    """Automorphism group (with exact order) and optionally a canonical form.

    ``canonical_form`` is a byte string equal for two inputs iff they are
    isomorphic as colored digraphs with blocks. ``canonical_labeling[x]`` is
    the position of vertex x in that form.
    """
    limit = GRAPH_LIMIT if graph_limit is None else graph_limit
    if g.n > limit:
        raise SizeLimit(f"{g.n} vertices exceeds the graph limit {limit}")
    s = _Search(g)
    gens = s.run()
    group = PermutationGroup(gens, g.n)
    assert group.order() == s.orbit_product
    form = lam = None
    if canonical:
        cert, cells = s.canonical()
        colors = np.empty(g.n, dtype=np.int64)
        colors[cells] = np.array(g.colors)
        form = colors.tobytes() + cert
        lam = tuple(int(x) for x in cells)
    return AutomorphismResult(group, form, lam, s.nodes)


def find_isomorphism(g1: ColoredDigraph, g2: ColoredDigraph, graph_limit=None):
    """A vertex map g1 -> g2 preserving arcs, colors and blocks, or None."""
    if g1.n != g2.n:
        return None
    a = automorphisms(g1, graph_limit=graph_limit)
    b = automorphisms(g2, graph_limit=graph_limit)
    if a.canonical_form != b.canonical_form:
        return None
    inv_b = [0] * g2.n
    for x, pos in enumerate(b.canonical_labeling):
        inv_b[pos] = x
    return tuple(inv_b[a.canonical_labeling[x]] for x in range(g1.n))
