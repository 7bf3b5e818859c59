"""
Building Hadamard matrices
==========================

Sylvester, Paley and Kronecker constructions, normalization, regularity and
the Bush-type block test.
"""
import numpy as np

from benthad import HadamardMatrix, kronecker, normalize, paley, regularity, sylvester
from benthad.matrix import bush_check

# Sylvester matrices are indexed by binary vectors: H[x, y] = (-1)^<x, y>
s4 = sylvester(2)
print(s4.entries)
print(s4.to_text())

# the two Paley families; kind II is symmetric
for q, kind in [(7, "I"), (11, "I"), (5, "II"), (17, "II")]:
    h = paley(q, kind)
    print(f"paley({q}, {kind}): order {h.v}, symmetric={h.symmetric}")

# normalizing multiplies rows and columns by signs until row 0 and column 0 are +1
p36 = paley(17, "II")
n, (row_signs, col_signs) = normalize(p36)
print("normalized first row all +1:", bool(np.all(n.entries[0] == 1)))

# a regular matrix of order 4 (row sums 2) which is also Bush-type
b4 = HadamardMatrix([[1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1]])
print("sigma:", regularity(b4), "bush:", bush_check(b4))

# Kronecker products stay regular, but the block layout needs regrouping to be Bush-type
k = kronecker(b4, b4)
print("kron sigma:", regularity(k), "bush as laid out:", bush_check(k))
order = sorted(range(16), key=lambda r: ((r // 4) // 2, (r % 4) // 2, (r // 4) % 2, r % 4 % 2))
b16 = HadamardMatrix(k.entries[np.ix_(order, order)])
print("regrouped bush:", bush_check(b16))
