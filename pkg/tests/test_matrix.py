import numpy as np
import pytest
from hypothesis import given, strategies as st

from benthad import (
    HadamardMatrix,
    MonomialMatrix,
    apply_monomial,
    bush_check,
    kronecker,
    normalize,
    paley,
    regularity,
    sylvester,
    sylvester_form,
)
from benthad._gf import GF, prime_power
from benthad.errors import BadEntry, BadResidueClass, NotHadamard, NotPrimePower, NotSquareOrder, SizeLimit

from conftest import BUSH4

S4_ROWS = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


def test_order_two():
    h = HadamardMatrix([[1, 1], [1, -1]])
    assert h.v == 2 and h.u is None


def test_rejects_non_orthogonal():
    with pytest.raises(NotHadamard):
        HadamardMatrix([[1, 1], [1, 1]])


def test_rejects_bad_entry():
    with pytest.raises(BadEntry):
        HadamardMatrix([[1, 0], [1, -1]])


def test_s4_attributes():
    h = HadamardMatrix(S4_ROWS)
    assert (h.v, h.u, h.symmetric) == (4, 1, True)
    assert h == sylvester(2)


def test_immutable(s4):
    with pytest.raises(ValueError):
        s4.entries[0, 0] = -1
    with pytest.raises(AttributeError):
        s4.v = 5


def test_sylvester_small():
    assert sylvester(0).entries.tolist() == [[1]]
    assert sylvester(2).entries.tolist() == S4_ROWS


def test_s16_eigenspace_dimension(s16):
    # zero trace forces eigenvalues +4 and -4 to have multiplicity 8 each
    assert np.trace(s16.entries) == 0
    assert np.linalg.matrix_rank(s16.entries - 4 * np.eye(16)) == 8


def test_sylvester_size_limit():
    with pytest.raises(SizeLimit):
        sylvester(11)
    assert sylvester(4, max_order=16).v == 16


def test_sylvester_form_identity_is_sylvester():
    assert sylvester_form(np.eye(4, dtype=int)) == sylvester(4)


@pytest.mark.parametrize("q,kind,v", [(3, "I", 4), (7, "I", 8), (11, "I", 12), (19, "I", 20), (27, "I", 28),
                                      (5, "II", 12), (9, "II", 20), (13, "II", 28), (17, "II", 36), (25, "II", 52)])
def test_paley_orders(q, kind, v):
    h = paley(q, kind)
    assert h.v == v
    if kind == "II":
        assert h.symmetric


def test_paley_errors():
    with pytest.raises(BadResidueClass):
        paley(4, "I")
    with pytest.raises(BadResidueClass):
        paley(7, "II")
    with pytest.raises(NotPrimePower):
        paley(15, "I")


def test_paley36_normalized_form(p36):
    n, _ = normalize(p36)
    assert np.all(n.entries[0] == 1) and np.all(n.entries[:, 0] == 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 25, 27])
def test_gf_field_axioms(q):
    f = GF(q)
    for a in range(q):
        assert f.sub(a, a) == 0
        assert f.mul(a, 1) == a
        if a:
            assert any(f.mul(a, b) == 1 for b in range(1, q))


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27])
def test_quadratic_character(q):
    f = GF(q)
    chi = f.quadratic_character()
    squares = {f.mul(a, a) for a in range(1, q)}
    assert chi[0] == 0
    assert all(chi[a] == (1 if a in squares else -1) for a in range(1, q))
    assert sum(chi) == 0


def test_prime_power():
    assert prime_power(27) == (3, 3)
    with pytest.raises(NotPrimePower):
        prime_power(12)


def test_kronecker_sylvester():
    assert kronecker(sylvester(2), sylvester(2)) == sylvester(4)
    assert kronecker(sylvester(1), sylvester(1)) == sylvester(2)
    h = paley(7, "I")
    assert kronecker(h, sylvester(0)) == h


def test_normalize_examples(s4):
    n, (dr, dc) = normalize(s4)
    assert n == s4 and dr.is_identity() and dc.is_identity()
    n2, _ = normalize(-s4)
    assert n2 == s4


@given(st.integers(0, 2**32 - 1))
def test_normalize_recovers(seed):
    rng = np.random.default_rng(seed)
    h = paley(11, "I")
    p, q = MonomialMatrix.random(12, rng), MonomialMatrix.random(12, rng)
    k = apply_monomial(p, q, h)
    n, (dr, dc) = normalize(k)
    assert np.array_equal(dr @ ((dc.T @ k.entries.T).T), n.entries)
    assert np.all(n.entries[0] == 1) and np.all(n.entries[:, 0] == 1)


def test_regularity():
    assert regularity(sylvester(2)) is None
    b = HadamardMatrix(BUSH4)
    assert regularity(b) == 2
    assert regularity(-b) == -2


def test_bush(bush16, s16):
    assert bush_check(HadamardMatrix(BUSH4))
    assert bush_check(bush16)
    assert regularity(bush16) == 4
    assert not bush_check(s16)
    assert not bush_check(sylvester(2))
    with pytest.raises(NotSquareOrder):
        bush_check(sylvester(3))


def test_apply_monomial_examples(s4):
    ident = MonomialMatrix.identity(4)
    minus = MonomialMatrix.diagonal([-1] * 4)
    assert apply_monomial(ident, ident, s4) == s4
    assert apply_monomial(minus, minus, s4) == s4
    swap = MonomialMatrix.permutation((1, 0, 2, 3))
    k = apply_monomial(swap, ident, s4)
    assert k.entries.tolist() == [S4_ROWS[1], S4_ROWS[0]] + S4_ROWS[2:]


@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_monomial_matches_dense(n, seed):
    rng = np.random.default_rng(seed)
    p, q = MonomialMatrix.random(n, rng), MonomialMatrix.random(n, rng)
    a, b = p.to_array(), q.to_array()
    assert np.array_equal((p @ q).to_array(), a @ b)
    assert np.array_equal(p.T.to_array(), a.T)
    assert (p @ p.T).is_identity()
    x = rng.integers(-5, 5, size=(n, 3))
    assert np.array_equal(p @ x, a @ x)
    assert MonomialMatrix.from_array(a) == p


@given(st.integers(0, 2**32 - 1))
def test_equivalence_preserves_hadamard(seed):
    rng = np.random.default_rng(seed)
    h = sylvester(3)
    k = apply_monomial(MonomialMatrix.random(8, rng), MonomialMatrix.random(8, rng), h)
    assert np.array_equal(k.entries @ k.entries.T, 8 * np.eye(8))


def test_content_hash_stable(s16):
    assert s16.content_hash == sylvester(4).content_hash
    assert s16.content_hash != (-s16).content_hash
