"""
Affine transforms and the orthogonal groups over GF(2)
======================================================

An extended affine transform T(A, b, d, c) acts on sign vectors of length 2^m
as a monomial matrix. It commutes with the Sylvester matrix exactly when A is
orthogonal, b = d and b has even weight.
"""
import numpy as np

from benthad import ExtendedAffineTransform, eat_in_saut, orth_group, sylvester
from benthad.affine import orth_group_order, saut_transforms

for m in range(1, 6):
    _, count = orth_group(m)
    print(f"|O_{m}| = {count:4d}  (closed formula {orth_group_order(m)})")
print("formula continues:", [orth_group_order(m) for m in range(6, 9)])

# the Walsh partner: S M(T) = M(T') S
t = ExtendedAffineTransform.make([[1, 1, 0], [0, 1, 0], [0, 0, 1]], [1, 0, 1], [0, 1, 1], -1)
s8 = sylvester(3).entries
lhs = s8 @ t.monomial().to_array()
rhs = t.walsh_partner().monomial().to_array() @ s8
print("partner identity holds:", np.array_equal(lhs, rhs), " T in SAut:", eat_in_saut(t))

ts = saut_transforms(3)
print(f"transforms commuting with S_8: {len(ts)} = |O_3| * 2^3")
