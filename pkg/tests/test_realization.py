from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cbundle.errors import ChartError, DomainError
from cbundle.realization import (big_cell_chart, cone_point, jacobian_check, matrix_exp,
                                 realization_for, sample_cone_point, sl2_irrep, sln_wedge)
from cbundle.rootdata import build_root_system, parabolic_from_weight, weight_system
from cbundle.standardize import check_exponent_matrix, extend_to_standard
from oracles import plucker_relation

MODELS = [("sl2", 1), ("sl2", 2), ("sl2", 3), ("wedge", (2, 1)), ("wedge", (3, 1)), ("wedge", (3, 2)),
          ("wedge", (4, 2)), ("wedge", (5, 2)), ("wedge", (6, 3))]


def build(kind, arg):
    return sl2_irrep(arg) if kind == "sl2" else sln_wedge(*arg)


@pytest.mark.parametrize("kind,arg", MODELS)
def test_chevalley_and_weights(kind, arg):
    real = build(kind, arg)
    assert real.chevalley_defects() == []
    ws = weight_system(real.rs, real.omega)
    assert Counter(real.basis_weights) == Counter(ws.expanded())
    assert real.basis_weights[real.highest_index] == real.omega


def test_sl2_shapes():
    r1 = sl2_irrep(1)
    assert r1.dim == 2 and r1.basis_weights == ((1,), (-1,))
    r2 = sl2_irrep(2)
    assert np.array_equal(r2.op_H[(1,)], np.diag([2, 0, -2]))
    with pytest.raises(DomainError):
        sl2_irrep(0)


def test_wedge_ranges():
    assert sln_wedge(4, 2).dim == 6
    assert sln_wedge(2, 1).op_X[(1,)].tolist() == sl2_irrep(1).op_X[(1,)].tolist()
    for n, k in [(4, 0), (4, 4), (7, 2), (1, 1)]:
        with pytest.raises(DomainError):
            sln_wedge(n, k)


def test_realization_for():
    assert realization_for(build_root_system("A", 3), (0, 1, 0)).dim == 6
    assert realization_for(build_root_system("A", 2), (1, 1)) is None
    assert realization_for(build_root_system("B", 2), (1, 0)) is None


def test_cone_point_examples():
    real = sl2_irrep(1)
    assert np.allclose(cone_point(real).coords, real.v0)
    c, y = 2 - 1j, 0.5 + 3j
    assert np.allclose(cone_point(real, c, ys={(1,): y}).coords, [c, c * y])
    p = sample_cone_point(real, 1.0, 7)
    assert np.any(p.coords != 0)
    assert np.array_equal(p.coords, sample_cone_point(real, 1.0, 7).coords)
    with pytest.raises(DomainError):
        cone_point(real, 0)


def test_matrix_exp_paths():
    n = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
    assert np.allclose(matrix_exp(n), [[1, 1, 1], [0, 1, 2], [0, 0, 1]])
    m = np.array([[0, 1], [-1, 0]], dtype=complex)
    assert np.allclose(matrix_exp(np.pi * m), -np.eye(2))


@given(st.integers(0, 2**32 - 1))
def test_wedge_points_satisfy_plucker(seed):
    p = sample_cone_point(sln_wedge(4, 2), 0.7, seed).coords
    assert abs(plucker_relation(p)) < 1e-9 * max(1.0, np.linalg.norm(p) ** 2)


def test_chart_sl2():
    real = sl2_irrep(1)
    chart = big_cell_chart(real, parabolic_from_weight(real.rs, real.omega))
    assert chart.F.tolist() == [1, 0] and chart.F_beta[(1,)].tolist() == [0, 1]
    y, z = 0.3 - 0.2j, 1.5j
    coords, f = chart.coordinates(chart.point({(1,): y}, z))
    assert np.isclose(f, z) and np.allclose(coords, [y])
    with pytest.raises(ChartError):
        chart.coordinates(np.array([0, 1], dtype=complex))
    assert chart.lowest_defects() == []


def test_chart_rejects_foreign_parabolic():
    real = sln_wedge(4, 2)
    with pytest.raises(DomainError):
        big_cell_chart(real, parabolic_from_weight(real.rs, (1, 0, 0)))


@pytest.mark.parametrize("kind,arg", MODELS)
def test_jacobian_is_constant_diagonal(kind, arg):
    real = build(kind, arg)
    parab = parabolic_from_weight(real.rs, real.omega)
    chart = big_cell_chart(real, parab)
    rng = np.random.default_rng(5)
    k = len(chart.roots)
    for _ in range(3):
        y = rng.normal(size=k) + 1j * rng.normal(size=k)
        res = jacobian_check(real, parab, y, complex(*rng.normal(size=2)), chart=chart)
        assert res.max_deviation < 1e-6
    with pytest.raises(ChartError):
        jacobian_check(real, parab, np.zeros(k), 0)


def test_wedge_action_is_standard():
    rs = build_root_system("A", 3)
    std = extend_to_standard(rs, (0, 1, 0))
    rows = [std.row(mu) for mu in sln_wedge(4, 2).basis_weights]
    assert check_exponent_matrix(rows).is_d_standard


@given(st.integers(0, 2**32 - 1))
def test_norm_monotonicity(seed):
    # d/dt ||t e_j . v|| at t = 1 equals sum_mu d_{mu,j} |v_mu|^2 / ||v||, positive
    real = sln_wedge(4, 2)
    std = extend_to_standard(real.rs, real.omega)
    v = sample_cone_point(real, 1.0, seed).coords
    rows = np.array([std.row(mu) for mu in real.basis_weights], dtype=float)
    h = 1e-6
    for j in range(rows.shape[1]):
        def norm(t):
            return np.linalg.norm(t ** rows[:, j] * v)
        deriv = (norm(1 + h) - norm(1 - h)) / (2 * h)
        assert deriv > 0
        assert np.isclose(deriv, (rows[:, j] * np.abs(v) ** 2).sum() / np.linalg.norm(v), rtol=1e-5)
