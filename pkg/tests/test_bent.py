import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from benthad import (
    HadamardMatrix,
    covering_distance,
    dual,
    eigenspace_basis,
    greedy_minor,
    is_bent,
    is_self_dual_bent,
    kron_seq,
    kronecker,
    search_eigenspace,
    search_exhaustive,
    selfdualize,
    sylvester,
    sylvester_form,
    symplectic_form,
)
from benthad import linalg
from benthad.bent import HadamardCode, covering_radius
from benthad.errors import DimensionTooLarge, EmptyEigenspace, NotBent, NotSelfDual, NotSquareOrder, SizeLimit

from conftest import BUSH4

# eigenvalues of S_2 (x) [[1,1],[-1,1]] are +-sqrt2 (1 +- i): 2 is not among them
NO_EIGEN4 = HadamardMatrix(np.kron([[1, 1], [1, -1]], [[1, 1], [-1, 1]]))


def brute_self_dual(h):
    return {x for x in itertools.product((1, -1), repeat=h.v) if is_self_dual_bent(h, x)}


def test_dual_examples(s4):
    assert dual(s4, (1, 1, 1, -1)).self_dual
    assert dual(s4, (-1, -1, -1, 1)).self_dual
    d = dual(s4, (1, 1, 1, 1))
    assert not d.bent and not d.self_dual
    assert is_bent(s4, (1, 1, 1, -1))


def test_dual_requires_square_order():
    with pytest.raises(NotSquareOrder):
        dual(sylvester(3), [1] * 8)
    with pytest.raises(NotSquareOrder):
        search_exhaustive(sylvester(3))


def test_exhaustive_s4(s4):
    res = search_exhaustive(s4)
    assert res.as_strings() == ["+++-", "---+"]
    assert res.as_set() == brute_self_dual(s4)


@pytest.mark.parametrize("mat", [sylvester(2), HadamardMatrix(BUSH4), -HadamardMatrix(BUSH4), NO_EIGEN4])
def test_exhaustive_matches_brute_force_v4(mat):
    assert search_exhaustive(mat).as_set() == brute_self_dual(mat)
    bent = {x for x in itertools.product((1, -1), repeat=4) if is_bent(mat, x)}
    assert search_exhaustive(mat, "bent").as_set() == bent


def test_s16_counts(s16):
    sd = search_exhaustive(s16)
    bent = search_exhaustive(s16, "bent")
    assert sd.count == 20
    assert bent.count == 896
    assert sd.as_set() <= bent.as_set()


def test_exhaust_limit(s16):
    with pytest.raises(SizeLimit):
        search_exhaustive(s16, exhaust_limit=15)


def test_threads_do_not_change_result(s16):
    a = search_exhaustive(s16, threads=1).as_strings()
    b = search_exhaustive(s16, threads=4).as_strings()
    assert a == b


def test_eigenspace_dimensions(s4, s16):
    assert eigenspace_basis(s4).k == 2
    eb = eigenspace_basis(s16)
    assert eb.k == 8
    minor = linalg.columns(list(eb.basis), list(eb.columns))
    assert linalg.det(minor) != 0


def test_regular_matrix_has_all_one_in_eigenspace(bush16):
    eb = eigenspace_basis(bush16)
    j = [1] * 16
    assert linalg.rank(list(eb.basis) + [j]) == eb.k


def test_greedy_minor_examples():
    b = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    assert greedy_minor(b).columns == [0, 1, 2]
    dup = [[1, 1, 0, 2], [0, 0, 1, 3]]
    assert greedy_minor(dup).columns == [0, 2]
    z = greedy_minor([[0, 1, 0], [0, 0, 1]])
    assert z.first_column_zero and z.columns == [1, 2]


def test_eigen_matches_exhaust(s4, s16, bush16):
    for h in (s4, s16, bush16, -bush16, HadamardMatrix(BUSH4)):
        assert search_eigenspace(h).as_strings() == search_exhaustive(h).as_strings()


def test_eigen_empty_eigenspace():
    with pytest.raises(EmptyEigenspace):
        search_eigenspace(NO_EIGEN4)
    assert search_exhaustive(NO_EIGEN4).count == 0


def test_eigen_k_limit(s16):
    with pytest.raises(DimensionTooLarge):
        search_eigenspace(s16, k_limit=7)


def test_paley36_eigen(p36):
    res = search_eigenspace(p36)
    assert res.k == 18
    assert res.count == 204
    assert all(is_self_dual_bent(p36, x) for x in res.sequences)


def test_selfdualize(s4, s16):
    x = (1, 1, 1, -1)
    s, h2 = selfdualize(s4, x)
    assert s.is_identity() and h2 == s4
    # (1,1,-1,1) is bent for S_4 but its dual is (1,-1,1,1)
    y = np.array([1, 1, -1, 1])
    assert is_bent(s4, y) and not is_self_dual_bent(s4, y)
    s, h2 = selfdualize(s4, y)
    assert np.array_equal(h2.entries @ y, 2 * y)
    with pytest.raises(NotBent):
        selfdualize(s4, (1, 1, 1, 1))
    sd = search_exhaustive(s16).as_set()
    bent_only = [x for x in search_exhaustive(s16, "bent").sequences if tuple(x) not in sd]
    for x in bent_only[:50]:
        _, h2 = selfdualize(s16, x)
        assert np.array_equal(h2.entries @ x, 4 * x)


def test_covering_distance(s4, s16):
    assert covering_distance(s4, (1, 1, 1, -1)) == 1
    assert covering_distance(s16, s16.entries[:, 0]) == 0
    for x in search_exhaustive(s16, "bent").sequences[::37]:
        assert covering_distance(s16, x) == 6
    assert covering_radius(s16) == 6
    assert len(HadamardCode(s16)) == 32


def test_covering_radius_brute_force_v4(s4):
    # max over all words of the distance to the code equals (v - sqrt v)/2
    dists = [covering_distance(s4, x) for x in itertools.product((1, -1), repeat=4)]
    assert max(dists) == covering_radius(s4) == 1


def test_kron_seq(s4, s16, bush16):
    x = np.array([1, 1, 1, -1])
    assert is_self_dual_bent(s16, kron_seq(x, x, s4, s4))
    b = HadamardMatrix(BUSH4)
    assert np.array_equal(kron_seq([1] * 4, [1] * 4, b, b), np.ones(16))
    with pytest.raises(NotSelfDual):
        kron_seq([1, 1, 1, 1], x, s4, s4)
    big = kronecker(s16, s4)
    for y in search_exhaustive(s16).sequences:
        assert is_self_dual_bent(big, kron_seq(y, x))


@given(st.integers(0, 2**32 - 1))
def test_negation_closure(seed):
    # X self-dual => -X self-dual
    rng = np.random.default_rng(seed)
    sols = search_exhaustive(sylvester(4)).sequences
    x = sols[rng.integers(len(sols))]
    assert is_self_dual_bent(sylvester(4), -x)


_SYMP = sylvester_form(symplectic_form(4))
_SYMP_BENT = search_exhaustive(_SYMP, "bent").sequences


@given(st.integers(0, len(_SYMP_BENT) - 1))
def test_dual_of_dual_via_transpose(i):
    # Y = HX/4 bent for H^t with dual X
    x = _SYMP_BENT[i]
    d = dual(_SYMP, x)
    assert d.bent
    assert dual(_SYMP.T, d.dual).dual.tolist() == x.tolist()
