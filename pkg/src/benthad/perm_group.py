"""Permutation groups via a deterministic Schreier-Sims stabilizer chain.

A permutation of ``{0..n-1}`` is a tuple ``p`` with ``p[x]`` the image of x.
Composition ``compose(a, b)`` is ``a after b``.
"""
from __future__ import annotations

from math import prod


def identity(n):
    return tuple(range(n))


def compose(a, b):
    return tuple(a[x] for x in b)


def invert(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


class _Level:
    __slots__ = ("point", "gens", "trans", "done")

    def __init__(self, point, n):
        self.point = point
        self.gens = []
        self.trans = {point: identity(n)}
        self.done = set()  # (orbit point, generator index) pairs already sifted


class PermutationGroup:
    """Group generated by ``generators`` acting on ``degree`` points.

    The chain is built eagerly; ``order`` is the product of the basic orbit
    lengths and ``contains`` sifts through the chain.
    """

    def __init__(self, generators, degree=None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = len(gens[0])
        if any(len(g) != degree or sorted(g) != list(range(degree)) for g in gens):
            raise ValueError("generators must be permutations of the same degree")
        self.degree = degree
        self.generators = [g for g in gens if not is_identity(g)]
        self._levels = []
        for g in self.generators:
            h, i = self._sift(g)
            if not is_identity(h):
                self._extend(h, i)

    def _sift(self, g, start=0):
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            img = g[lvl.point]
            t = lvl.trans.get(img)
            if t is None:
                return g, i
            g = compose(invert(t), g)
        return g, len(self._levels)

    def _extend(self, g, i):
        """Add strong generator g (fixing base points before level i) and restore the chain."""
        n = self.degree
        if i == len(self._levels):
            point = next(x for x in range(n) if g[x] != x)
            self._levels.append(_Level(point, n))
        # g lies in every stabilizer G^(l) for l <= i
        for lvl in self._levels[: i + 1]:
            lvl.gens.append(g)
        for l in range(i, -1, -1):
            self._close(l)

    def _close(self, i):
        # extend the basic orbit and sift every unseen Schreier generator
        lvl = self._levels[i]
        changed = True
        while changed:
            changed = False
            for pt in list(lvl.trans):
                for gi in range(len(lvl.gens)):
                    if (pt, gi) in lvl.done:
                        continue
                    lvl.done.add((pt, gi))
                    s = lvl.gens[gi]
                    img = s[pt]
                    t_pt = lvl.trans[pt]
                    if img not in lvl.trans:
                        lvl.trans[img] = compose(s, t_pt)
                        changed = True
                        continue
                    schreier = compose(invert(lvl.trans[img]), compose(s, t_pt))
                    h, j = self._sift(schreier, i + 1)
                    if not is_identity(h):
                        self._extend(h, j)
                        changed = True

    @property
    def base(self):
        return [lvl.point for lvl in self._levels]

    @property
    def basic_orbit_lengths(self):
        return [len(lvl.trans) for lvl in self._levels]

    def order(self) -> int:
        return prod(self.basic_orbit_lengths)

    def contains(self, g) -> bool:
        g = tuple(int(x) for x in g)
        if len(g) != self.degree:
            return False
        h, _ = self._sift(g)
        return is_identity(h)

    __contains__ = contains

    def elements(self):
        """Iterate over every element once (product of transversal elements)."""
        reps = [list(lvl.trans.values()) for lvl in self._levels]

        def rec(i, acc):
            if i < 0:
                yield acc
                return
            for t in reps[i]:
                yield from rec(i - 1, compose(t, acc))

        yield from rec(len(reps) - 1, identity(self.degree))

    def orbits(self):
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g):
                a, b = find(x), find(y)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for x in range(self.degree):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())
