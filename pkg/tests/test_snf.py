import random

from hypothesis import given, settings
from hypothesis import strategies as st

from unilred.snf import (
    SNFSolver,
    det,
    diagonal_of,
    hermite_row_basis,
    identity_matrix,
    integer_kernel,
    inverse_unimodular,
    lattice_contains,
    lattice_equal,
    mat_eq,
    mat_mul,
    smith_normal_form,
)


def check_snf(M, ncols=None):
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    U, D, V = smith_normal_form(M, ncols=n)
    assert mat_eq(mat_mul(mat_mul(U, M, inner=n), V), D)
    diag = diagonal_of(D, n)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    return diag


def test_snf_hand_example():
    # [[2,0],[0,3]]: row/column reduction by hand gives diag(1, 6)
    diag = check_snf([[2, 0], [0, 3]])
    assert diag == [1, 6]


def test_snf_zero_matrix():
    diag = check_snf([[0]])
    assert diag == [0]


def test_snf_identity():
    diag = check_snf(identity_matrix(3))
    assert diag == [1, 1, 1]


def test_snf_rectangular():
    assert check_snf([[2, 4, 4]]) == [2]
    assert check_snf([[2], [4], [4]]) == [2]


def test_snf_idempotent_on_diagonal():
    _, D, _ = smith_normal_form([[2, 0], [0, 6]])
    _, D2, _ = smith_normal_form(D)
    assert mat_eq(D, D2)


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-30, 30), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_snf_properties(M):
    check_snf(M)


@given(matrices)
@settings(max_examples=40, deadline=None)
def test_kernel_and_solver(M):
    n = len(M[0])
    s = SNFSolver(M)
    for row in s.kernel_basis():
        assert all(x == 0 for x in mat_mul(M, [[v] for v in row], inner=n)[0:1][0] for x in [x])
    # solve M x = M e_j must succeed
    for j in range(n):
        b = [M[i][j] for i in range(len(M))]
        x = s.solve(b)
        assert x is not None
        assert [sum(M[i][k] * x[k] for k in range(n)) for i in range(len(M))] == b


def test_kernel_basic():
    ker = integer_kernel([[1, -1]])
    assert len(ker) == 1
    assert ker[0] in ([1, 1], [-1, -1])


def test_inverse_unimodular():
    M = [[1, 2], [1, 3]]
    Minv = inverse_unimodular(M)
    assert mat_eq(mat_mul(M, Minv), identity_matrix(2))


def test_det():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [3, 4]]) == -2
    rng = random.Random(7)
    M = [[rng.randrange(-5, 6) for _ in range(4)] for _ in range(4)]
    U, D, V = smith_normal_form(M)
    prod = 1
    for d in diagonal_of(D):
        prod *= d
    assert abs(det(M)) == prod


def test_lattice_ops():
    basis = hermite_row_basis([[2, 0], [0, 2], [1, 1]], 2)
    assert lattice_contains(basis, [1, 1], 2)
    assert lattice_contains(basis, [3, 1], 2)
    assert not lattice_contains(basis, [1, 0], 2)
    assert lattice_equal([[2, 0], [1, 1]], [[1, 1], [0, 2]], 2)
    assert not lattice_equal([[2, 0], [1, 1]], [[1, 0], [0, 1]], 2)
