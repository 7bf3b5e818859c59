"""Reference solver: self-dual bent sequences as the variety of a polynomial ideal.

The system HX = 2uX together with X_i^2 = 1 generates an ideal in
Q[X_1, ..., X_v]. A reduced Groebner basis is computed by Buchberger's
algorithm and its (finite, +-1 valued) variety is read off by back
substitution. This is a correctness oracle for small v, not a fast engine.

Variables are ordered X_1 > X_2 > ... > X_v; under lex the exponent tuples
compare directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _product

import numpy as np

from .bent import _require_square
from .errors import SizeLimit
from .matrix import HadamardMatrix, sign_sort_key

GROEBNER_LIMIT = 16


def _lex_key(e):
    return e


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


ORDERS = {"lex": _lex_key, "degrevlex": _degrevlex_key}


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.nvars = nvars
        self.terms = {tuple(e): Fraction(c) for e, c in dict(terms).items() if c != 0}

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars, power=1):
        e = [0] * nvars
        e[i] = power
        return cls({tuple(e): 1}, nvars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(out, self.nvars)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = Polynomial({}, self.nvars)
        for e, c in other.terms.items():
            out = out + self.scale(c, e)
        return out

    def scale(self, c, mono=None):
        if mono is None:
            return Polynomial({e: c * a for e, a in self.terms.items()}, self.nvars)
        return Polynomial({tuple(x + y for x, y in zip(e, mono)): c * a for e, a in self.terms.items()}, self.nvars)

    def leading(self, order="lex"):
        """``(monomial, coefficient)`` of the leading term."""
        e = max(self.terms, key=ORDERS[order])
        return e, self.terms[e]

    def monic(self, order="lex"):
        return self.scale(1 / self.leading(order)[1])

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x**k
            total += t
        return total

    def variables(self):
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def sorted_terms(self, order="lex"):
        return sorted(self.terms.items(), key=lambda t: ORDERS[order](t[0]), reverse=True)

    def __repr__(self):
        return f"Polynomial({self.to_string()})"

    def to_string(self, names=None):
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass
class PolynomialIdeal:
    generators: list
    order: str = "lex"

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an ideal needs at least one generator")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self):
        return self.generators[0].nvars


def build_system(h: HadamardMatrix) -> PolynomialIdeal:
    """The v linear polynomials ``row_i(H) X - 2u X_i`` and v quadratics ``X_i^2 - 1``."""
    u = _require_square(h)
    v = h.v
    gens = []
    for i in range(v):
        coeffs = [int(a) for a in h.entries[i]]
        coeffs[i] -= 2 * u
        gens.append(Polynomial({tuple(int(j == m) for m in range(v)): c for j, c in enumerate(coeffs)}, v))
    for i in range(v):
        gens.append(Polynomial.variable(i, v, 2) - Polynomial.constant(1, v))
    return PolynomialIdeal(gens, "lex")


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(p, basis, order):
    """Fully reduce p modulo ``basis`` (monic polynomials with cached leading monomials)."""
    key = ORDERS[order]
    terms = dict(p.terms)
    rem = {}
    while terms:
        e = max(terms, key=key)
        c = terms[e]
        for lm, g in basis:
            if _divides(lm, e):
                shift = tuple(x - y for x, y in zip(e, lm))
                for ge, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(ge, shift))
                    s = terms.get(t, 0) - c * gc
                    if s:
                        terms[t] = s
                    else:
                        terms.pop(t, None)
                break
        else:
            rem[e] = c
            del terms[e]
    return Polynomial(rem, p.nvars)


def _spoly(f, g, lf, lg, order):
    m = _lcm(lf, lg)
    a = tuple(x - y for x, y in zip(m, lf))
    b = tuple(x - y for x, y in zip(m, lg))
    return f.scale(Fraction(1), a) - g.scale(Fraction(1), b)


def buchberger(ideal: PolynomialIdeal, groebner_limit=None):
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial).

    Pairs are processed smallest lcm first; the product criterion and
    Buchberger's chain criterion discard pairs known to reduce to zero.
    Worst-case cost is doubly exponential in the number of variables, hence
    the size guard.
    """
    order = ideal.order
    key = ORDERS[order]
    nv = ideal.nvars
    limit = GROEBNER_LIMIT if groebner_limit is None else groebner_limit
    if nv > limit:
        raise SizeLimit(f"Groebner basis cost can be doubly exponential; {nv} variables exceeds limit {limit}")

    polys = []  # list of (lm, monic poly) ; None for retired entries
    for g in ideal.generators:
        r = _reduce(g, [p for p in polys if p is not None], order)
        if r:
            r = r.monic(order)
            polys.append((r.leading(order)[0], r))
    if any(not any(lm) for lm, _ in polys):
        return [Polynomial.constant(1, nv)]

    pairs = {(i, j) for j in range(len(polys)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(polys[ij[0]][0], polys[ij[1]][0])), ij))
        pairs.discard((i, j))
        li, fi = polys[i]
        lj, fj = polys[j]
        m = _lcm(li, lj)
        if all(not (x and y) for x, y in zip(li, lj)):
            continue
        if any(
            k not in (i, j)
            and _divides(polys[k][0], m)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(polys))
        ):
            continue
        r = _reduce(_spoly(fi, fj, li, lj, order), polys, order)
        if not r:
            continue
        r = r.monic(order)
        lr = r.leading(order)[0]
        if not any(lr):
            return [Polynomial.constant(1, nv)]
        n = len(polys)
        polys.append((lr, r))
        pairs.update((a, n) for a in range(n))

    # minimal basis, then tail reduction
    lms = [lm for lm, _ in polys]
    keep = []
    for a, (lm, g) in enumerate(polys):
        if any(b != a and _divides(lms[b], lm) and (lms[b] != lm or b < a) for b in range(len(polys))):
            continue
        keep.append((lm, g))
    reduced = []
    for a, (lm, g) in enumerate(keep):
        others = [p for b, p in enumerate(keep) if b != a]
        lead = Polynomial({lm: 1}, nv)
        tail = _reduce(g - lead, others, order)
        reduced.append(lead + tail)
    reduced.sort(key=lambda p: key(p.leading(order)[0]), reverse=True)
    return reduced


def solve_pm1(basis, nvars=None):
    """Points of {+-1}^n where every basis polynomial vanishes, sorted + before -.

    Variables are assigned from the last (smallest under lex) to the first;
    each polynomial is checked as soon as its highest variable is assigned.
    The basis {1} yields no points.
    """
    if not basis:
        raise ValueError("empty basis")
    n = nvars if nvars is not None else basis[0].nvars
    if any(p.is_constant() and p for p in basis):
        return []
    levels = [[] for _ in range(n)]
    for p in basis:
        vs = p.variables()
        if vs:
            levels[min(vs)].append(p)
    out = []

    def extend(i, point):
        if i < 0:
            out.append(tuple(point))
            return
        for s in (1, -1):
            point[i] = s
            if all(p.evaluate(point) == 0 for p in levels[i]):
                extend(i - 1, point)
        point[i] = 0

    extend(n - 1, [0] * n)
    return [np.array(x, dtype=np.int64) for x in sorted(out, key=sign_sort_key)]


def search_groebner(h: HadamardMatrix, groebner_limit=None, order="lex"):
    """Self-dual bent sequences through a Groebner basis, as a SearchResult."""
    import time

    from .bent import SearchResult

    t0 = time.perf_counter()
    ideal = build_system(h)
    ideal.order = order
    basis = buchberger(ideal, groebner_limit)
    sols = solve_pm1(basis, h.v)
    if order != "lex":
        sols = _filter_pm1(ideal, basis, h.v)
    seqs = np.array(sols, dtype=np.int64).reshape(-1, h.v)
    return SearchResult(seqs, "groebner", h.v, None, len(basis), (time.perf_counter() - t0) * 1e3,
                        {"basis_size": len(basis), "order": order})


def _filter_pm1(ideal, basis, n):
    # non-lex bases are not triangular: test every +-1 point against the basis
    if any(p.is_constant() and p for p in basis):
        return []
    pts = [np.array(x, dtype=np.int64) for x in _product((1, -1), repeat=n)
           if all(p.evaluate(x) == 0 for p in basis)]
    return sorted(pts, key=sign_sort_key)
