"""
Three ways to find self-dual bent sequences
===========================================

X is self-dual bent for H of order v = 4u^2 when HX = 2uX. The exhaustive
scan, the eigenspace lift and the Groebner basis route must agree.
"""
import time

from benthad import (
    paley,
    search_eigenspace,
    search_exhaustive,
    search_groebner,
    sylvester,
    sylvester_form,
    symplectic_form,
)

s4 = sylvester(2)
for search in (search_exhaustive, search_eigenspace, search_groebner):
    res = search(s4)
    print(f"{res.method:9s} {res.as_strings()}")

# order 16: the plain Sylvester matrix and the one built from a symplectic form
# are different strong-equivalence classes with different answers
for name, h in [("sylvester(4)", sylvester(4)), ("symplectic", sylvester_form(symplectic_form(4)))]:
    ex = search_exhaustive(h)
    eg = search_eigenspace(h)
    assert ex.as_strings() == eg.as_strings()
    print(f"{name:13s} count={ex.count:4d}  eigenspace k={eg.k}  (exhaustive {ex.elapsed_ms:.0f} ms)")

# order 36 is far beyond 2^36 exhaustion; the eigenspace has k = 18
t0 = time.perf_counter()
res = search_eigenspace(paley(17, "II"))
print(f"paley(17, II): count={res.count} k={res.k} in {time.perf_counter() - t0:.2f} s")
print("first few:", res.as_strings()[:3])
