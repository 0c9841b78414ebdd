from itertools import product

import numpy as np
from hypothesis import given, strategies as st

from cbundle.linalg import (hermite_normal_form, hermite_with_transform, lattice_contains,
                            left_integer_kernel, matvec_left, rational_rank)

small = st.integers(-6, 6)
matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda k: st.lists(st.lists(small, min_size=k, max_size=k), min_size=n, max_size=n)))


@given(matrices)
def test_hermite_transform(a):
    h, u, r = hermite_with_transform(a)
    assert [matvec_left(row, a) for row in u] == h
    assert round(abs(np.linalg.det(np.array(u, dtype=float)))) == 1
    assert r == rational_rank(a) == np.linalg.matrix_rank(np.array(a, dtype=float))
    assert all(not any(row) for row in h[r:])
    pivots = [next(j for j, x in enumerate(row) if x) for row in h[:r]]
    assert pivots == sorted(pivots) and len(set(pivots)) == r
    for i, c in enumerate(pivots):
        assert h[i][c] > 0
        assert all(0 <= h[k][c] < h[i][c] for k in range(i))


@given(matrices)
def test_kernel_is_saturated(a):
    ker = left_integer_kernel(a)
    n = len(a)
    assert len(ker) == n - rational_rank(a)
    for v in ker:
        assert not any(matvec_left(v, a))
    # every small kernel vector is an integer combination of the basis
    for v in product(range(-2, 3), repeat=min(n, 4)):
        v = list(v) + [0] * (n - len(v))
        if not any(matvec_left(v, a)):
            assert lattice_contains(ker, v)


def test_known_kernel():
    assert left_integer_kernel([[1], [1]]) == [[1, -1]]
    assert left_integer_kernel([[2], [4]]) == [[2, -1]]
    assert left_integer_kernel([[4, 2], [2, 4]]) == []
    assert hermite_normal_form([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]


def test_lattice_contains_rejects():
    basis = hermite_normal_form([[2, 0], [0, 3]])
    assert lattice_contains(basis, [4, 6])
    assert not lattice_contains(basis, [1, 0])
