"""
Symmetry groups and strong equivalence
======================================

SAut(H) (monomials commuting with H) permutes the self-dual bent sequences.
Its permutation part C(H), the polarities and the full group Aut(H) of pairs
(P, Q) with PHQ = H all come from graph automorphism searches.
"""
import numpy as np

from benthad import (
    MonomialMatrix,
    apply_monomial,
    c_group,
    full_aut,
    paley,
    polarities,
    saut,
    search_exhaustive,
    strong_equivalent,
    sylvester,
    sylvester_form,
    symplectic_form,
)
from benthad.symmetry import factor_order

matrices = {
    "sylvester(4)": sylvester(4),
    "symplectic 16": sylvester_form(symplectic_form(4)),
    "paley(17, II)": paley(17, "II"),
}
for name, h in matrices.items():
    s, c, a = saut(h).order, c_group(h).order, full_aut(h).order
    print(f"{name:14s} |SAut|={factor_order(s):18s} |C|={factor_order(c):12s} |Aut|={factor_order(a)}")

print("polarities of paley(17, II):", len(polarities(matrices["paley(17, II)"])))

# SAut orbits on the solutions
h = matrices["symplectic 16"]
sols = search_exhaustive(h).as_set()
gens = saut(h).generators
orbits, seen = [], set()
for x in sorted(sols):
    if x in seen:
        continue
    orb, todo = {x}, [x]
    while todo:
        y = todo.pop()
        for p in gens:
            z = tuple(int(t) for t in p @ np.array(y))
            if z not in orb:
                orb.add(z)
                todo.append(z)
    seen |= orb
    orbits.append(len(orb))
print("SAut orbit sizes on the 140 solutions:", sorted(orbits))

# strong equivalence recovers a witness for a hidden conjugation
rng = np.random.default_rng(0)
p = MonomialMatrix.random(16, rng)
k = apply_monomial(p, p.T, h)
w = strong_equivalent(h, k)
print("witness found:", w is not None, "maps H to K:", apply_monomial(w, w.T, h) == k)
print("sylvester(4) ~ symplectic:", strong_equivalent(matrices["sylvester(4)"], h) is not None)
