import pytest
from hypothesis import given, strategies as st

from cbundle.errors import DomainError
from cbundle.rootdata import build_root_system, weight_system
from cbundle.standardize import (ExponentMatrix, check_exponent_matrix, exponent_matrix_of,
                                 exponent_row, extend_to_standard)


def test_sl2_defining():
    std = extend_to_standard(build_root_system("A", 1), (1,))
    assert std.d_prime == 3 and std.d == 6
    assert std.row((1,)) == (4, 2) and std.row((-1,)) == (2, 4)


def test_sl2_adjoint():
    std = extend_to_standard(build_root_system("A", 1), (2,))
    assert std.d_prime == 5
    assert [std.row(mu) for mu in [(2,), (0,), (-2,)]] == [(7, 3), (5, 5), (3, 7)]


def test_sl3_defining():
    std = extend_to_standard(build_root_system("A", 2), (1, 0))
    assert std.d_prime == 5 and std.d == 15
    assert [std.row(mu) for mu in [(1, 0), (-1, 1), (0, -1)]] == [(6, 5, 4), (4, 6, 5), (5, 4, 6)]


def test_row_unknown_weight():
    std = extend_to_standard(build_root_system("A", 1), (1,))
    with pytest.raises(DomainError):
        std.row((3,))


def test_check_matrix():
    rep = check_exponent_matrix(ExponentMatrix.from_rows([[1, 0], [0, 1]]))
    assert rep.is_d_standard and rep.d == 1 and rep.rank_full
    rep = check_exponent_matrix([[2, 1], [1, 1]])
    assert not rep.row_sums_constant and not rep.is_d_standard
    rep = check_exponent_matrix([[3, -1], [1, 1]])
    assert rep.row_sums_constant and not rep.entries_nonneg and not rep.is_d_standard
    with pytest.raises(DomainError):
        check_exponent_matrix([])


def test_exponent_row():
    assert exponent_row((1, -1), 4) == (5, 3, 4)


@given(st.sampled_from([("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 3)]), st.data())
def test_standard_extension_property(t, data):
    rs = build_root_system(*t)
    omega = tuple(data.draw(st.lists(st.integers(0, 2), min_size=t[1], max_size=t[1])))
    if not any(omega):
        omega = (1,) + omega[1:]
    std = extend_to_standard(rs, omega)
    rep = check_exponent_matrix(exponent_matrix_of(std))
    assert rep.is_d_standard and rep.d == std.d == std.d_prime * (rs.rank + 1)
    assert all(x > 0 for row in std.exponent_table.values() for x in row)
    assert len(exponent_matrix_of(std).entries) == weight_system(rs, omega).dimension
