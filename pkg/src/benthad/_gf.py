"""Minimal finite field GF(p^n) arithmetic, enough for the Paley construction.

Elements are the integers ``0..q-1``; base-p digit ``i`` of an element is the
coefficient of ``t^i`` modulo the defining polynomial. The defining polynomial
is the smallest monic irreducible of degree n when monic polynomials are
ordered by the integer whose base-p digits are their lower coefficients.
"""
from functools import lru_cache
from itertools import product

from .errors import NotPrimePower


def prime_power(q):
    """Return ``(p, n)`` with ``q == p**n`` or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, n


def _polymod(a, f, p):
    # a, f: coefficient lists, lowest degree first; f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [x % p for x in a[:df]]


def _is_irreducible(f, p):
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_polymod(f, g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def defining_polynomial(p, n):
    if n == 1:
        return (0, 1)
    for low in product(range(p), repeat=n):
        f = list(reversed(low)) + [1]
        if f[0] and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with ``q`` elements."""

    def __init__(self, q):
        self.q = q
        self.p, self.n = prime_power(q)
        self.poly = defining_polynomial(self.p, self.n)

    def _digits(self, a):
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def sub(self, a, b):
        return self._undigits([(x - y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._undigits(_polymod(prod, self.poly, self.p))

    def quadratic_character(self):
        """Table ``chi[a]``: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        squares = {self.mul(a, a) for a in range(1, self.q)}
        return [0] + [1 if a in squares else -1 for a in range(1, self.q)]
