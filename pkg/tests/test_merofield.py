import random

import pytest
from hypothesis import given, strategies as st

from cbundle.errors import ConfigurationError, HypothesisError
from cbundle.gaussian import GaussianRational
from cbundle.linalg import lattice_contains
from cbundle.merofield import (build_monomial_lattice, image_rank, kernel_generic, kernel_specific,
                               transcendence_degree, verify_kernel, weight_matrix, WeightHom)
from cbundle.rootdata import build_root_system, parabolic_from_weight, weight_system
from cbundle.standardize import extend_to_standard


def setup(t1, w1, t2, w2):
    rs1, rs2 = build_root_system(*t1), build_root_system(*t2)
    lat = build_monomial_lattice(parabolic_from_weight(rs1, w1), parabolic_from_weight(rs2, w2),
                                 weight_system(rs1, w1), weight_system(rs2, w2), rs1, rs2)
    return lat, weight_matrix(lat, extend_to_standard(rs1, w1), extend_to_standard(rs2, w2))


P1 = (("A", 1), (1,))
G24 = (("A", 3), (0, 1, 0))
P3 = (("A", 3), (1, 0, 0))


def test_p1p1_lattice():
    lat, hom = setup(*P1, *P1)
    assert lat.rank == 4 and lat.generator_weights == ((1,), (-1,), (1,), (-1,))
    assert lat.labels == ("F1", "F1_b(α1)", "F2", "F2_b(α1)")
    assert hom.D == ((4, 2, 0, 0), (2, 4, 0, 0), (0, 0, 4, 2), (0, 0, 2, 4))
    lam = ["1", "1", "1+i", "1+i"]
    assert [str(w) for w in hom.generator_weights(lam)] == ["6", "6", "6+6i", "6+6i"]
    assert hom.weight([0, 0, 0, 0], lam).is_zero()


def test_ranks():
    assert setup(*G24, *P1)[0].rank == 7
    assert setup(*G24, *P3)[0].rank == 9


def test_kernels_p1p1():
    _, hom = setup(*P1, *P1)
    assert kernel_generic(hom).rank == 0
    k = kernel_specific(hom, ["1", "1", "i", "i"])
    assert k.basis == ((1, -1, 0, 0), (0, 0, 1, -1))
    with pytest.raises(HypothesisError):
        kernel_specific(hom, ["1", "1", "2", "2"])


def test_equal_rows_kernel():
    hom = WeightHom(((1, 2), (1, 2), (0, 3)), (1, 1))
    k = kernel_generic(hom)
    assert lattice_contains(k.basis, (1, -1, 0))


def test_trdeg_values():
    _, hom = setup(*P1, *P1)
    rep = transcendence_degree(kernel_specific(hom, ["1", "1", "i", "i"]), (1, 1),
                               (True, True), (True, True), True)
    assert rep.trdeg == 2 and rep.scalar_identity and rep.verdict
    assert transcendence_degree(kernel_generic(hom), (1, 1)).trdeg == 0
    lat, hom = setup(*G24, *P3)
    lam = ["1"] * 4 + ["i"] * 4
    k = kernel_specific(hom, lam)
    rep = transcendence_degree(k, lat.dims)
    assert rep.trdeg == 7 and rep.verdict is None
    assert verify_kernel(hom, k, lam)


def test_block_mismatch():
    rs = build_root_system("A", 1)
    lat, _ = setup(*P1, *P1)
    with pytest.raises(ConfigurationError):
        weight_matrix(lat, extend_to_standard(rs, (2,)), extend_to_standard(rs, (1,)))


CASES = [(P1, P1), (G24, P1), (G24, P3), ((("A", 2), (1, 1)), P1), ((("B", 2), (1, 0)), P1),
         ((("C", 2), (0, 1)), (("A", 2), (1, 0)))]


@given(st.sampled_from(CASES), st.integers(0, 10_000))
def test_specific_contains_generic(case, seed):
    (t1, w1), (t2, w2) = case
    lat, hom = setup(t1, w1, t2, w2)
    rng = random.Random(seed)
    n1, n2 = hom.block_sizes
    lam = [GaussianRational(rng.randint(1, 9), 0) / rng.randint(1, 5) for _ in range(n1)] + \
          [GaussianRational(rng.randint(-5, 5), rng.randint(1, 9)) for _ in range(n2)]
    gen = kernel_generic(hom)
    spec = kernel_specific(hom, lam)
    assert verify_kernel(hom, gen) and verify_kernel(hom, spec, lam)
    for v in gen.basis:
        assert lattice_contains(spec.basis, v)
    # two values with distinct arguments in [0, pi) are Q-independent
    r = image_rank(hom.generator_weights(lam))
    assert r == 2
    assert spec.rank == lat.rank - r <= lat.rank - 2
    assert transcendence_degree(spec, lat.dims).trdeg <= sum(lat.dims)
