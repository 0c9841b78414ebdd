import pytest
from hypothesis import given, strategies as st

from cbundle.errors import ConfigurationError, DomainError
from cbundle.rootdata import (build_root_system, pair_with_coroot, parabolic_from_weight,
                              weight_system, weyl_dimension)
from oracles import (candidate_weights, dimension_type_a, kostant_multiplicities,
                     roots_from_orbits)

TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]
COUNTS = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10, ("B", 2): 4, ("B", 3): 9,
          ("C", 2): 4, ("C", 3): 9, ("D", 3): 6, ("D", 4): 12}


@pytest.mark.parametrize("series,rank", TYPES)
def test_positive_roots(series, rank):
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == COUNTS[(series, rank)]
    assert sorted(rs.positive_roots) == roots_from_orbits(rs.cartan)
    assert all(rs.cartan[i][i] == 2 for i in range(rank))


def test_cartan_conventions():
    # row i is alpha_i in fundamental-weight coordinates
    assert build_root_system("B", 2).cartan == ((2, -2), (-1, 2))
    assert build_root_system("C", 2).cartan == ((2, -1), (-2, 2))
    assert build_root_system("A", 3).cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


@pytest.mark.parametrize("series,rank", [("E", 6), ("B", 1), ("D", 2), ("A", 0)])
def test_bad_types(series, rank):
    with pytest.raises(ConfigurationError):
        build_root_system(series, rank)


def test_sl3_adjoint():
    ws = weight_system(build_root_system("A", 2), (1, 1))
    assert len(ws.weights) == 7 and ws.multiplicity((0, 0)) == 2 and ws.dimension == 8


def test_non_dominant_rejected():
    with pytest.raises(DomainError):
        weight_system(build_root_system("A", 2), (1, -1))


@pytest.mark.parametrize("series,rank,omega,dim", [
    ("B", 2, (1, 0), 5), ("B", 2, (0, 1), 4), ("C", 2, (1, 0), 4), ("C", 2, (0, 1), 5),
    ("B", 3, (1, 0, 0), 7), ("B", 3, (0, 0, 1), 8), ("C", 3, (0, 1, 0), 14),
    ("D", 4, (0, 1, 0, 0), 28), ("D", 4, (0, 0, 0, 1), 8), ("A", 3, (0, 1, 0), 6),
])
def test_dimensions_against_kostant(series, rank, omega, dim):
    rs = build_root_system(series, rank)
    ws = weight_system(rs, omega)
    assert ws.dimension == weyl_dimension(rs, omega) == dim
    assert dict(ws.entries) == kostant_multiplicities(rs.cartan, omega, candidate_weights(rs.cartan, omega))


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_type_a_dimension_formula(omega):
    rs = build_root_system("A", 3)
    assert weyl_dimension(rs, omega) == dimension_type_a(omega)


@given(st.sampled_from(TYPES[:7]), st.data())
def test_weyl_invariance(t, data):
    rs = build_root_system(*t)
    omega = tuple(data.draw(st.lists(st.integers(0, 1), min_size=t[1], max_size=t[1])))
    ws = weight_system(rs, omega)
    for mu in ws:
        for i in range(rs.rank):
            assert ws.multiplicity(rs.reflect(mu, i)) == ws.multiplicity(mu)


def test_pairing():
    rs = build_root_system("A", 1)
    assert pair_with_coroot(rs, (1,), (1,)) == 1
    assert pair_with_coroot(rs, (2,), (1,)) == 2
    b2 = build_root_system("B", 2)
    # long root alpha1, short root alpha2
    assert b2.pair_with_coroot((0, 1), (0, 1)) == 1
    # varpi_1 = e1 against the short root e1 and the long root e1 + e2
    assert b2.pair_with_coroot((1, 0), (1, 1)) == 2
    assert b2.pair_with_coroot((1, 0), (1, 2)) == 1
    with pytest.raises(DomainError):
        rs.pair_with_coroot((1,), (2,))


@pytest.mark.parametrize("series,rank,omega,dim,maximal", [
    ("A", 1, (1,), 1, True), ("A", 3, (0, 1, 0), 4, True), ("A", 3, (1, 0, 0), 3, True),
    ("A", 2, (1, 1), 3, False), ("B", 3, (0, 0, 1), 6, True), ("C", 3, (1, 0, 0), 5, True),
])
def test_parabolics(series, rank, omega, dim, maximal):
    rs = build_root_system(series, rank)
    p = parabolic_from_weight(rs, omega)
    assert p.dim_x == dim and p.is_maximal(rank) is maximal
    for beta in p.complement_roots:
        assert rs.pair_with_coroot(omega, beta) > 0 or any(
            beta[j] and omega[j] for j in range(rank))


def test_zero_weight_parabolic():
    with pytest.raises(DomainError):
        parabolic_from_weight(build_root_system("A", 2), (0, 0))
