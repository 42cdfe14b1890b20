import random

from hypothesis import given, settings, strategies as st

from starkindex.linalg import (coordinates_in, hnf, in_lattice, int_det, invariant_factors, lattice_index, matmul,
                               smith_normal_form)


def test_smith_examples():
    assert invariant_factors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert invariant_factors([[2, 0], [0, 6]]) == [2, 6]
    assert invariant_factors([[2, 1], [0, 3]]) == [1, 6]
    assert invariant_factors([[4, 6], [6, 4]]) == [2, 10]


def test_lattice_index_examples():
    assert lattice_index([[2, 0], [0, 3]]) == 6
    assert lattice_index([[2, 0], [0, 2]], [[1, 1], [0, 2]]) == 2


square = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_smith_product_is_determinant(A):
    d = abs(int_det(A))
    if d:
        prod = 1
        for x in invariant_factors(A):
            prod *= x
        assert prod == d


@given(square)
def test_smith_divisibility_chain(A):
    f = [x for x in invariant_factors(A) if x]
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


@settings(max_examples=50)
@given(st.integers(0, 10**6))
def test_index_is_multiplicative_in_towers(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)

    def step(base):
        M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            M[i][i] += rng.choice((2, 3, 5))
        return [[sum(M[i][k] * base[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    top = [[int(i == j) for j in range(n)] for i in range(n)]
    mid = step(top)
    if int_det(mid) == 0:
        return
    low = step(mid)
    if int_det(low) == 0:
        return
    assert lattice_index(low, top) == lattice_index(low, mid) * lattice_index(mid, top)


def test_hnf_membership_and_coordinates():
    H = hnf([[2, 4], [0, 6], [4, 2]])
    assert in_lattice([2, 4], H)
    assert not in_lattice([1, 0], H)
    c = coordinates_in([6, 6], H)
    assert [sum(c[i] * H[i][j] for i in range(len(H))) for j in range(2)] == [6, 6]


def test_smith_transforms():
    A = [[2, 1], [0, 3]]
    S = smith_normal_form(A)
    assert S.invariants == [1, 6]
    assert matmul(matmul(S.U, A), S.V) == [[1, 0], [0, 6]]
    assert abs(int_det(S.U)) == abs(int_det(S.V)) == 1
