import random

import pytest
from hypothesis import given, strategies as st

from cbundle.errors import DomainError, HypothesisError
from cbundle.gaussian import GaussianRational
from cbundle.hyperbolicity import (arg_less, block_hyperbolicity, induced_spectrum,
                                   is_weakly_hyperbolic, lambda_mu, make_lambda, root_on_torus,
                                   scale_unipotent)
from cbundle.rootdata import build_root_system
from cbundle.standardize import extend_to_standard

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


def test_basic_examples():
    assert is_weakly_hyperbolic(["1", "i"], 1, 1).holds
    rep = is_weakly_hyperbolic(["i", "1"], 1, 1)
    assert not rep.holds and rep.witness == (1, 2)
    assert is_weakly_hyperbolic(["1", "1", "i", "i"], 2, 2).holds
    assert not is_weakly_hyperbolic(["1", "1"], 1, 1).holds


def test_zero_and_half_plane():
    rep = is_weakly_hyperbolic(["0", "i"], 1, 1)
    assert not rep.holds and rep.witness == ("zero", 1)
    rep = is_weakly_hyperbolic(["1", "-i"], 1, 1)
    assert rep.witness == ("half-plane", 2)
    rep = is_weakly_hyperbolic(["1", "-1"], 1, 1)
    assert rep.witness == ("half-plane", 2)


def test_length_mismatch():
    with pytest.raises(DomainError):
        is_weakly_hyperbolic(["1", "i"], 2, 1)


def test_arg_less():
    assert arg_less("1", "i") and not arg_less("i", "1")
    assert arg_less("1+i", "-1+i")
    assert not arg_less("1+i", "2+2i")
    with pytest.raises(DomainError):
        arg_less("0", "1")


def test_lambda_mu_example():
    std = extend_to_standard(A1, (1,))
    assert lambda_mu(std, ["1", "i"], (1,)) == GaussianRational.parse("4+2i")
    assert lambda_mu(std, ["1", "1"], (-1,)) == GaussianRational(6)


def test_induced_spectrum_calabi_eckmann():
    std = extend_to_standard(A1, (1,))
    spec = induced_spectrum(std, std, ["1", "1", "i", "i"])
    assert [str(x) for x in spec.expanded(0)] == ["6", "6"]
    assert [str(x) for x in spec.expanded(1)] == ["6i", "6i"]
    assert spec.report.holds
    with pytest.raises(HypothesisError):
        induced_spectrum(std, std, ["i", "i", "1", "1"])


def test_root_on_torus_matches_difference():
    std = extend_to_standard(A2, (1, 1))
    lam = ["1", "2+i", "3/2i"]
    for beta in A2.positive_roots:
        bw = A2.root_to_weight(beta)
        for mu in std.weights:
            up = tuple(m + b for m, b in zip(mu, bw))
            if up in std.weights:
                assert root_on_torus(A2, beta, lam) == lambda_mu(std, lam, up) - lambda_mu(std, lam, mu)


def test_make_lambda_commuting():
    lam = make_lambda(["1", "1", "i", "i"], (2, 2), [(0, (1,), "1")], [A1, A1])
    assert len(lam.unipotent) == 1 and lam.hyperbolicity().holds
    with pytest.raises(DomainError, match="commute"):
        make_lambda(["1", "2", "i", "i"], (2, 2), [(0, (1,), "1")], [A1, A1])
    with pytest.raises(DomainError):
        make_lambda(["1", "1", "i", "i"], (2, 2), [(0, (2,), "1")], [A1, A1])
    with pytest.raises(DomainError):
        make_lambda(["1", "1", "i"], (2, 2))


def test_scale_unipotent():
    lam = make_lambda(["1", "1", "1", "i", "i", "i"], (3, 3), [(0, (1, 1), "2"), (1, (1, 0), "1")],
                      [A2, A2])
    out = scale_unipotent(lam.unipotent, "1/2")
    assert [str(t.coeff) for t in out.terms] == ["1/2", "1/2"]
    assert scale_unipotent(lam.unipotent, 0).degenerate


def _random_upper(rng, lo, hi):
    import math
    t = rng.uniform(lo, hi)
    r = rng.randint(1, 400)
    return GaussianRational(round(r * math.cos(t)), max(0, round(r * math.sin(t))))


@given(st.integers(0, 10_000))
def test_block_matches_pairwise(seed):
    rng = random.Random(seed)
    n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
    vals = [_random_upper(rng, 0, 3.1) for _ in range(n1 + n2)]
    if any(v.is_zero() for v in vals):
        return
    assert block_hyperbolicity(vals[:n1], vals[n1:]).holds == is_weakly_hyperbolic(vals, n1, n2).holds


@given(st.integers(0, 10_000))
def test_permutation_and_scaling_invariance(seed):
    rng = random.Random(seed)
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    vals = [_random_upper(rng, 0, 1.5) for _ in range(n1)] + [_random_upper(rng, 1.4, 3.1) for _ in range(n2)]
    if any(v.is_zero() for v in vals):
        return
    base = is_weakly_hyperbolic(vals, n1, n2).holds
    b1, b2 = vals[:n1], vals[n1:]
    rng.shuffle(b1)
    rng.shuffle(b2)
    scale = GaussianRational(rng.randint(1, 9)) / rng.randint(1, 9)
    assert is_weakly_hyperbolic([v * scale for v in b1 + b2], n1, n2).holds == base
