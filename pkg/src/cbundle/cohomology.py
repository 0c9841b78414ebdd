"""Vanishing sets, Picard and Kahler verdicts, the Euler-type equation, Hilbert series.

The cohomology of ``S_lambda(L)`` is reported at the level of which degrees
can be nonzero; nothing here computes sheaf cohomology.  The one exact
computation is the equation ``sum_j b_j z_j d(phi)/dz_j = f`` on Laurent
polynomials, whose solution divides each coefficient by ``b . m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import DomainError, HypothesisError, ResonanceError
from .gaussian import ZERO, GaussianRational, gvec
from .hyperbolicity import is_weakly_hyperbolic
from .rootdata import RootSystem, weyl_dimension

HOLOMORPHIC = "holomorphic"
H1 = "h1"


@dataclass(frozen=True)
class VanishingReport:
    dims: tuple[int, int]
    allowed_q_L: frozenset
    allowed_q_S: frozenset
    known: dict  # degree -> statement that is guaranteed

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "allowed_q_L": sorted(self.allowed_q_L),
            "allowed_q_S": sorted(self.allowed_q_S),
            "known": {str(k): v for k, v in sorted(self.known.items())},
            "possibly_nonzero": sorted(self.allowed_q_S - set(self.known)),
        }


def vanishing_sets(dim_x1: int, dim_x2: int) -> VanishingReport:
    """Degrees ``q`` where ``H^q(L; O)`` and ``H^q(S_lambda(L); O)`` may be nonzero."""
    if dim_x1 < 1 or dim_x2 < 1:
        raise DomainError("both flag varieties must have positive dimension")
    sums = {dim_x1, dim_x2, dim_x1 + dim_x2}
    q_l = frozenset({0} | sums)
    q_s = frozenset({0, 1} | sums | {d + 1 for d in sums})
    known = {0: "C (constant functions)", 1: "contains C"}
    return VanishingReport((dim_x1, dim_x2), q_l, q_s, known)


@dataclass(frozen=True)
class PicardReport:
    pic0: str | None
    pic: str | None
    violations: tuple[str, ...]
    trace: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"pic0": self.pic0, "pic": self.pic, "violations": list(self.violations),
                "trace": list(self.trace)}


def picard_report(dims: Sequence[int], maximal: Sequence[bool], generator: Sequence[bool]) -> PicardReport:
    """Picard group verdicts for ``S_lambda(L)`` over ``G1/P1 x G2/P2``.

    ``generator[i]`` says the dual of ``L_i`` generates ``Pic(X_i)``; for a
    ``P^1`` factor this is required before anything beyond ``C^l`` is claimed.
    """
    violations, trace = [], ["X_i = G_i/P_i simply connected (flag variety)",
                             "dual bundles negative ample"]
    for i, (d, gen) in enumerate(zip(dims, generator), start=1):
        if d == 1 and not gen:
            violations.append(f"X_{i} = P^1 but the bundle is not the generator of Pic(P^1)")
        elif d == 1:
            trace.append(f"X_{i} = P^1 carries the generator bundle")
    if violations:
        return PicardReport("C^l for some l >= 1", None, tuple(violations), tuple(trace))
    pic = None
    if all(maximal) and all(generator):
        trace.append("P_1, P_2 maximal and L_1, L_2 generators of Pic(X_i) = Z")
        pic = "C"
    return PicardReport("C", pic, (), tuple(trace))


@dataclass(frozen=True)
class KahlerVerdict:
    non_kahler: bool
    verdict: str | None
    trace: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"non_kahler": self.non_kahler, "verdict": self.verdict, "trace": list(self.trace)}


def kahler_obstruction(h1_zero: bool, c1_nonzero: bool) -> KahlerVerdict:
    trace = []
    if h1_zero:
        trace.append("H^1(X_1; R) = 0")
    if c1_nonzero:
        trace.append("c_1(dual L_1) != 0 in H^2(X_1; R)")
    if h1_zero and c1_nonzero:
        return KahlerVerdict(True, "no symplectic structure; non-Kahler for any complex structure",
                             tuple(trace))
    return KahlerVerdict(False, None, tuple(trace))


# ---------------------------------------------------------------------------
# Laurent polynomials and the Euler-type equation


@dataclass(frozen=True)
class LaurentPoly:
    nvars: int
    terms: Mapping  # exponent tuple -> GaussianRational (nonzero)
    mode: str = HOLOMORPHIC

    def __post_init__(self):
        if self.mode not in (HOLOMORPHIC, H1):
            raise DomainError(f"unknown mode {self.mode!r}")
        clean = {}
        for m, c in self.terms.items():
            m = tuple(int(x) for x in m)
            c = GaussianRational.coerce(c)
            if len(m) != self.nvars:
                raise DomainError(f"exponent {m} has the wrong length")
            _check_shape(m, self.mode)
            if not c.is_zero():
                clean[m] = clean.get(m, ZERO) + c
        object.__setattr__(self, "terms", {m: c for m, c in sorted(clean.items()) if not c.is_zero()})

    @classmethod
    def zero(cls, nvars: int, mode: str = HOLOMORPHIC) -> "LaurentPoly":
        return cls(nvars, {}, mode)

    def is_zero(self) -> bool:
        return not self.terms

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) - c
        return LaurentPoly(self.nvars, out, self.mode)

    def to_list(self) -> list:
        return [[list(m), str(c)] for m, c in self.terms.items()]

    @classmethod
    def from_list(cls, nvars: int, items, mode: str = HOLOMORPHIC) -> "LaurentPoly":
        return cls(nvars, {tuple(m): GaussianRational.coerce(c) for m, c in items}, mode)


def _check_shape(m: tuple[int, ...], mode: str) -> None:
    if mode == HOLOMORPHIC:
        if any(x < 0 for x in m):
            raise DomainError(f"negative exponent in holomorphic mode: {m}")
    else:
        if len(m) < 2 or m[0] >= 0 or m[1] >= 0 or any(x < 0 for x in m[2:]):
            raise DomainError(f"H^1-mode exponents need m1 < 0, m2 < 0, rest >= 0: {m}")


def _dot(b: Sequence[GaussianRational], m: Sequence[int]) -> GaussianRational:
    total = ZERO
    for bj, mj in zip(b, m):
        if mj:
            total = total + bj * mj
    return total


def solve_cohomological_equation(f: LaurentPoly, b, block_sizes: tuple[int, int] | None = None) -> LaurentPoly:
    """The Laurent polynomial ``phi`` with ``sum_j b_j z_j d(phi)/dz_j = f``.

    When ``block_sizes`` is given, ``b`` is first checked for weak hyperbolicity
    of that type.  A term with ``b . m = 0`` raises ``ResonanceError``.
    """
    b = gvec(b)
    if len(b) != f.nvars:
        raise DomainError(f"b has {len(b)} entries for {f.nvars} variables")
    if block_sizes is not None:
        rep = is_weakly_hyperbolic(b, *block_sizes)
        if not rep.holds:
            raise HypothesisError(f"b is not weakly hyperbolic: {rep.reason}")
    if f.mode == HOLOMORPHIC and (0,) * f.nvars in f.terms:
        raise DomainError("f has a constant term")
    out = {}
    for m, c in f.terms.items():
        bm = _dot(b, m)
        if bm.is_zero():
            raise ResonanceError(m)
        out[m] = c / bm
    return LaurentPoly(f.nvars, out, f.mode)


def euler_apply(phi: LaurentPoly, b) -> LaurentPoly:
    """``sum_j b_j z_j d/dz_j`` applied variable by variable."""
    b = gvec(b)
    out: dict = {}
    for j, bj in enumerate(b):
        for m, c in phi.terms.items():
            if m[j]:
                # z_j d/dz_j z^m = m_j z^m
                out[m] = out.get(m, ZERO) + bj * c * m[j]
    return LaurentPoly(phi.nvars, out, phi.mode)


def random_laurent_poly(rng: np.random.Generator, nvars: int, nterms: int, mode: str = HOLOMORPHIC,
                        max_exp: int = 6, max_num: int = 20) -> LaurentPoly:
    """Random f with Gaussian-rational coefficients and no constant term."""
    terms = {}
    while len(terms) < nterms:
        m = [int(x) for x in rng.integers(0, max_exp + 1, nvars)]
        if mode == H1:
            m[0], m[1] = -int(rng.integers(1, max_exp + 1)), -int(rng.integers(1, max_exp + 1))
        if not any(m):
            continue
        re_part = int(rng.integers(-max_num, max_num + 1))
        im_part = int(rng.integers(-max_num, max_num + 1))
        den = int(rng.integers(1, max_num + 1))
        c = GaussianRational(re_part, im_part) / den
        if not c.is_zero():
            terms[tuple(m)] = c
    return LaurentPoly(nvars, terms, mode)


# ---------------------------------------------------------------------------
# coordinate ring of the cone


def hilbert_series_cone(rs: RootSystem, omega, k_max: int) -> list[int]:
    """``dim V(k omega)`` for ``k = 0..k_max``: graded pieces of the cone's coordinate ring."""
    omega = tuple(int(x) for x in omega)
    if not any(omega) or any(x < 0 for x in omega):
        raise DomainError("omega must be dominant and nonzero")
    if k_max < 0:
        raise DomainError("k_max must be nonnegative")
    return [weyl_dimension(rs, tuple(k * x for x in omega)) for k in range(k_max + 1)]
