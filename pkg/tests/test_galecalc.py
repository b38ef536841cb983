from itertools import combinations
import random

from hypothesis import given, strategies as st
import pytest

from toricover.errors import RankDeficientError
from toricover.exactla import IntMatrix, hnf_basis, same_row_lattice, saturate_rows
from toricover.fixtures import QUADRIC_Q, QUADRIC_V, QUADRIC_V_TILDE
from toricover.galecalc import (
    classify_fan_matrix,
    classify_weight_matrix,
    gale_dual,
    is_pws_fan_matrix,
    plane_intersection,
)

from corpus import complete_fan_corpus
from oracles import brute_condition_f

P2 = IntMatrix([[1, 0, -1], [0, 1, -1]])
QUOT = IntMatrix([[1, 1, -1, -1], [1, -1, 1, -1]])


def full_rank(max_rows=3, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(r, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                min_size=r, max_size=r))).map(IntMatrix).filter(
        lambda M: M.rank() == M.nrows)


def test_gale_dual_examples():
    assert gale_dual(IntMatrix.identity(3)).shape == (0, 3)
    assert same_row_lattice(gale_dual(P2), IntMatrix([[1, 1, 1]]))
    assert same_row_lattice(gale_dual(QUADRIC_V), QUADRIC_Q)


def test_gale_dual_requires_full_rank():
    with pytest.raises(RankDeficientError):
        gale_dual(IntMatrix([[1, 1], [2, 2]]))


@given(full_rank())
def test_gale_dual_properties(V):
    G = gale_dual(V)
    assert (G @ V.T).is_zero()
    assert G.nrows == V.ncols - V.nrows
    assert G == hnf_basis(G)
    if G.nrows:
        assert gale_dual(G) == saturate_rows(V)


@given(full_rank())
def test_cf_matrices_are_their_own_double_dual(V):
    if classify_fan_matrix(V).is_cf and V.ncols > V.nrows:
        assert same_row_lattice(gale_dual(gale_dual(V)), V)


def test_classify_fan_examples():
    r = classify_fan_matrix(P2)
    assert r.is_f and r.is_cf and r.is_reduced and not r.failed_conditions
    r = classify_fan_matrix(IntMatrix.identity(2))
    assert not r.is_f and "b" in r.failed_labels()
    r = classify_fan_matrix(QUOT)
    assert r.is_f and not r.is_cf and r.failed_labels() == ("e",)


def test_classify_fan_conditions_c_d_and_reducedness():
    r = classify_fan_matrix(IntMatrix([[1, 0, -1, 0], [0, 1, -1, 0]]))
    assert "c" in r.failed_labels()
    r = classify_fan_matrix(IntMatrix([[1, 2, 0, -1], [0, 0, 1, -1]]))
    assert "d" in r.failed_labels()
    r = classify_fan_matrix(IntMatrix([[2, 0, -1], [0, 1, -1]]))
    assert r.is_f and not r.is_reduced and "reduced" in r.failed_labels()
    r = classify_fan_matrix(IntMatrix([[1, 0, -1], [0, 1, -1], [0, 0, 0]]))
    assert "a" in r.failed_labels() and not r.is_f


@given(full_rank())
def test_cf_implies_f(V):
    r = classify_fan_matrix(V)
    assert not r.is_cf or r.is_f
    assert (not r.failed_conditions) == (r.is_f and r.is_cf and r.is_reduced)


def test_classify_weight_examples():
    assert classify_weight_matrix(IntMatrix([[1, 1, 1]])).is_w
    r = classify_weight_matrix(IntMatrix([[1, 0]]))
    assert not r.is_w and "e" in r.failed_labels()
    assert classify_weight_matrix(QUADRIC_Q).is_w


def test_classify_weight_other_failures():
    r = classify_weight_matrix(IntMatrix([[1, -1, 1]]))
    assert "c" in r.failed_labels()
    r = classify_weight_matrix(IntMatrix([[2, 2, 2]]))
    assert "b" in r.failed_labels()
    r = classify_weight_matrix(IntMatrix([[1, 1, 0, 1], [0, 0, 0, 1]]))
    assert "d" in r.failed_labels()
    r = classify_weight_matrix(IntMatrix([[1, 1, 1, 0], [0, 1, 0, 1]]))
    assert "f" not in r.failed_labels()


def test_pws():
    assert is_pws_fan_matrix(QUADRIC_V_TILDE)
    assert not is_pws_fan_matrix(QUADRIC_V)
    assert is_pws_fan_matrix(P2)


def test_plane_intersection_generator():
    basis = hnf_basis(IntMatrix([[1, -1, 0], [0, 1, 1]]))
    gens = plane_intersection(basis, 0, 1)
    assert len(gens) == 1
    a, b = gens[0]
    assert a * b < 0 and abs(a) == abs(b) == 1


def test_condition_f_matches_brute_force_on_random_2x4():
    rng = random.Random(17)
    checked = flagged = 0
    while checked < 150:
        Q = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(2)]
        M = IntMatrix(Q)
        if M.rank() != 2:
            continue
        checked += 1
        basis = hnf_basis(M)
        ours = {(i, j) for i, j in combinations(range(4), 2)
                if len(gens := plane_intersection(basis, i, j)) >= 2
                or any(a * b < 0 for a, b in gens)}
        assert ours == brute_condition_f(Q, 8), Q
        flagged += bool(ours)
        r = classify_weight_matrix(M)
        assert ("f" in r.failed_labels()) == bool(ours)
    assert 0 < flagged < checked


def test_weight_matrices_of_complete_fans_are_w():
    for fan in complete_fan_corpus()[:60]:
        if classify_fan_matrix(fan.V).is_f:
            assert classify_weight_matrix(gale_dual(fan.V)).is_w, fan.V
