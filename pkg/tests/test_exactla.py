from fractions import Fraction
from itertools import product
from math import gcd
import random

from hypothesis import given, settings, strategies as st
import pytest

from toricover.errors import NoSolutionError, RankDeficientError
from toricover.exactla import (
    FiniteAbelianGroup,
    IntMatrix,
    RatMatrix,
    check_refutation,
    cokernel_structure,
    hnf,
    hnf_basis,
    in_row_lattice,
    invariant_factors,
    kernel_saturated,
    same_row_lattice,
    saturate_rows,
    snf,
    solve_rational,
    strictly_positive_in_rowspace,
)

from oracles import (
    brute_positive_witness,
    cokernel_counts,
    det_exact,
    hnf_2x2,
    rank_exact,
)


def matrices(max_rows=4, max_cols=5, lo=-3, hi=3):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                min_size=r, max_size=r).map(lambda rows: IntMatrix(rows, c))))


def full_row_rank(max_rows=3, max_cols=5):
    return matrices(max_rows, max_cols).filter(
        lambda M: M.nrows >= 1 and M.rank() == M.nrows)


def is_hnf(H):
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        if any(not 0 <= H[k, p] < row[p] for k in range(i)):
            return False
        last = p
    return True


# matrix basics

def test_matrix_shape_and_access():
    A = IntMatrix([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A[1, 2] == 6
    assert A.T.tolist() == [[1, 4], [2, 5], [3, 6]]
    assert A.column(1) == (2, 5)
    assert str(A) == "1 2 3\n4 5 6"


def test_matrix_is_exact_at_large_magnitude():
    big = 10 ** 40
    A = IntMatrix([[big, 1], [1, big]])
    assert A.det() == big * big - 1
    assert (A @ A)[0, 0] == big * big + 1


def test_empty_matrices():
    Z = IntMatrix.zeros(0, 3)
    assert Z.shape == (0, 3) and Z.rank() == 0
    assert IntMatrix.identity(0).det() == 1


@given(matrices(4, 4))
def test_det_matches_fraction_elimination(A):
    if A.nrows == A.ncols:
        assert A.det() == det_exact(A.tolist())
    assert A.rank() == rank_exact(A.tolist(), A.ncols)


def test_ratmatrix_lowest_terms():
    R = RatMatrix([[Fraction(2, 4), Fraction(-3, 6)]])
    assert R[0, 0] == Fraction(1, 2)
    assert R[0, 0].denominator > 0
    assert not R.is_integral()


# Hermite normal form

def test_hnf_identity():
    r = hnf(IntMatrix.identity(2))
    assert r.H == IntMatrix.identity(2)
    assert r.U == IntMatrix.identity(2)


def test_hnf_two_by_two_example():
    assert hnf(IntMatrix([[2, 4], [1, 1]])).H.tolist() == [[1, 1], [0, 2]]


def test_hnf_zero_matrix():
    r = hnf(IntMatrix.zeros(2, 2))
    assert r.H.is_zero() and r.rank == 0


def test_hnf_matches_exhaustive_search_on_all_small_2x2():
    for entries in product(range(-3, 4), repeat=4):
        A = IntMatrix([entries[:2], entries[2:]])
        assert hnf(A).H.tolist() == hnf_2x2(A.tolist()), A


@given(matrices())
def test_hnf_invariants(A):
    r = hnf(A)
    assert r.U @ A == r.H
    assert abs(r.U.det()) == 1
    assert is_hnf(r.H)
    assert hnf(r.H).H == r.H


# Smith normal form

def test_snf_examples():
    assert snf(IntMatrix([[1, 0], [0, 2]])).diagonal == (1, 2)
    assert snf(IntMatrix([[2, 4], [1, 1]])).diagonal == (1, 2)
    assert snf(IntMatrix([[2, 0], [0, 3]])).diagonal == (1, 6)


@given(matrices())
def test_snf_invariants(A):
    r = snf(A)
    assert r.U @ A @ r.W == r.S
    assert abs(r.U.det()) == 1 and abs(r.W.det()) == 1
    assert r.W @ r.W_inv == IntMatrix.identity(A.ncols)
    d = [r.S[i, i] for i in range(min(A.shape))]
    nonzero = [x for x in d if x]
    assert all(x > 0 for x in nonzero)
    assert d[:len(nonzero)] == nonzero  # zeros trail
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    for i in range(A.nrows):
        for j in range(A.ncols):
            if i != j:
                assert r.S[i, j] == 0


@given(matrices(4, 4))
def test_snf_product_is_abs_det(A):
    if A.nrows == A.ncols and A.det() != 0:
        prod = 1
        for d in snf(A).diagonal:
            prod *= d
        assert prod == abs(A.det())


# cokernels and lattices

def test_cokernel_examples():
    assert cokernel_structure(IntMatrix([[2]]), 1) == FiniteAbelianGroup(0, (2,))
    assert cokernel_structure(IntMatrix([[1, 0, -1], [0, 1, -1]]), 3) == \
        FiniteAbelianGroup(1, ())


def test_group_descriptor():
    assert FiniteAbelianGroup(3, (2,)).descriptor() == "Z^3 x Z/2"
    assert FiniteAbelianGroup(0, ()).descriptor() == "0"
    assert FiniteAbelianGroup(1, (2, 4)).descriptor() == "Z^1 x Z/2 x Z/4"
    G = FiniteAbelianGroup(2, (3, 6))
    assert FiniteAbelianGroup.parse(G.descriptor()) == G


def test_group_rejects_bad_chain():
    with pytest.raises(ValueError):
        FiniteAbelianGroup(0, (2, 3))
    with pytest.raises(ValueError):
        FiniteAbelianGroup(0, (1,))


def _finite_cokernel_cases(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, 3)
        r = rng.randint(k, 4)
        A = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(r)]
        if rank_exact(A, k) != k:
            continue
        G = cokernel_structure(IntMatrix(A), k)
        if G.order > 64 or G.order ** k > 40000:
            continue
        out.append((A, k, G))
    return out


def test_cokernel_matches_coset_enumeration():
    for A, k, G in _finite_cokernel_cases(150, 11):
        order, killed_by = cokernel_counts(A, k)
        assert G.free_rank == 0
        assert G.order == order, A
        for d in range(1, order + 1):
            if order % d == 0:
                expected = 1
                for f in G.invariant_factors:
                    expected *= gcd(d, f)
                assert killed_by(d) == expected, (A, d)


@given(matrices())
def test_cokernel_free_rank(A):
    G = cokernel_structure(A, A.ncols)
    assert G.free_rank == A.ncols - A.rank()
    assert G.invariant_factors == tuple(d for d in invariant_factors(A)
                                        if d > 1)


def test_kernel_examples():
    assert kernel_saturated(IntMatrix.identity(3)).shape == (0, 3)
    K = kernel_saturated(IntMatrix([[1, 0, -1], [0, 1, -1]]))
    assert same_row_lattice(K, IntMatrix([[1, 1, 1]]))
    K = kernel_saturated(IntMatrix([[1, 1, -1, -1], [1, -1, 1, -1]]))
    assert same_row_lattice(K, IntMatrix([[1, 0, 0, 1], [0, 1, 1, 0]]))


def test_saturation_examples():
    assert same_row_lattice(saturate_rows(IntMatrix([[2, 0], [0, 2]])),
                            IntMatrix.identity(2))
    A = IntMatrix([[1, 1, -1, -1], [1, -1, 1, -1]])
    S = saturate_rows(A)
    assert same_row_lattice(S, IntMatrix([[1, 0, 0, -1], [0, 1, -1, 0]]))
    assert S == kernel_saturated(kernel_saturated(A))


@given(matrices())
def test_kernel_is_saturated_kernel(A):
    K = kernel_saturated(A)
    assert (A @ K.T).is_zero()
    assert K.nrows == A.ncols - A.rank()
    if K.nrows:
        assert invariant_factors(K) == (1,) * K.nrows
    assert K == hnf_basis(K)


@given(matrices())
def test_saturation_idempotent_and_canonical(A):
    S = saturate_rows(A)
    assert saturate_rows(S) == S
    assert S == hnf_basis(S)
    assert S.nrows == A.rank()
    for row in A:
        assert in_row_lattice(S, row)


@given(full_row_rank())
def test_double_kernel_is_saturation(A):
    assert kernel_saturated(kernel_saturated(A)) == saturate_rows(A)


def test_solve_examples():
    B = IntMatrix([[3, -1], [2, 7]])
    assert solve_rational(IntMatrix.identity(2), B) == RatMatrix(B.tolist())
    X = solve_rational(IntMatrix([[2, 0], [0, 2]]), IntMatrix([[2, 2], [0, 4]]))
    assert X.to_int().tolist() == [[1, 1], [0, 2]]
    X = solve_rational(IntMatrix([[1, 0, 0, -1], [0, 1, -1, 0]]),
                       IntMatrix([[1, 1, -1, -1], [1, -1, 1, -1]]))
    assert X.to_int().tolist() == [[1, 1], [1, -1]]


def test_solve_errors():
    with pytest.raises(NoSolutionError):
        solve_rational(IntMatrix([[1, 0]]), IntMatrix([[0, 1]]))
    with pytest.raises(RankDeficientError):
        solve_rational(IntMatrix([[1, 1], [2, 2]]), IntMatrix([[1, 1]]))


@given(full_row_rank(), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_solve_recovers_coefficients(A, coeffs):
    c = (coeffs * 2)[:A.nrows]
    B = IntMatrix([c]) @ A
    X = solve_rational(A, B)
    assert X.to_int().tolist() == [c]


# strict positivity

def test_positivity_examples():
    r = strictly_positive_in_rowspace(IntMatrix([[1, 1, 1]]))
    assert r.feasible and r.witness == (1, 1, 1)
    r = strictly_positive_in_rowspace(IntMatrix([[1, -1]]))
    assert not r.feasible
    assert check_refutation(IntMatrix([[1, -1]]), r.refutation)
    Q = IntMatrix([[2, 1, 0, 2, 0, 2, 1, 0], [1, 1, 1, 1, 1, 1, 1, 1],
                   [0, 0, 0, 1, 1, 2, 2, 2]])
    r = strictly_positive_in_rowspace(Q)
    assert r.feasible and all(x >= 1 for x in r.witness)


def _check_certificate(A, r):
    if r.feasible:
        x = IntMatrix([list(r.coefficients)]) @ A
        assert x.tolist()[0] == list(r.witness)
        assert all(v >= 1 for v in r.witness)
    else:
        y = r.refutation
        assert all(v >= 0 for v in y) and any(y)
        assert A.apply(y) == (0,) * A.nrows


def test_positivity_matches_brute_force_on_random_2x4():
    rng = random.Random(5)
    counts = {True: 0, False: 0}
    for _ in range(300):
        Q = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)]
        A = IntMatrix(Q)
        r = strictly_positive_in_rowspace(A)
        _check_certificate(A, r)
        brute = brute_positive_witness(Q, 10)
        if brute is not None:
            assert r.feasible, Q
        counts[r.feasible] += 1
    assert counts[True] > 20 and counts[False] > 20


@settings(max_examples=150)
@given(matrices(3, 5))
def test_positivity_certificate_always_checks(A):
    _check_certificate(A, strictly_positive_in_rowspace(A))
