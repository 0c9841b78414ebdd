"""Laurent monomials in big-cell coordinates and their lambda-weights.

The function field of ``S_lambda(L)`` is generated by ratios of monomials in
``F_i, F_{i,beta}`` of total weight zero, so its transcendence degree is the
rank of the kernel lattice ``K`` of the weight map.  Everything here is exact
integer linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import CbundleError, ConfigurationError, HypothesisError
from .gaussian import ZERO, GaussianRational, gvec
from .hyperbolicity import is_weakly_hyperbolic
from .linalg import left_integer_kernel, matvec_left, rational_rank
from .rootdata import ParabolicData, Root, RootSystem, Weight, WeightSystem
from .standardize import StandardTorusData

GENERIC = "generic"
SPECIFIC = "specific"


def root_label(beta: Root) -> str:
    parts = []
    for i, c in enumerate(beta, start=1):
        if c:
            parts.append(f"α{i}" if c == 1 else f"{c}α{i}")
    return "+".join(parts)


@dataclass(frozen=True)
class MonomialLattice:
    labels: tuple[str, ...]
    blocks: tuple[int, ...]  # 0 or 1 per generator
    generator_weights: tuple[Weight, ...]
    highest: tuple[Weight, Weight]
    dims: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.labels)


def build_monomial_lattice(parab1: ParabolicData, parab2: ParabolicData, ws1: WeightSystem,
                           ws2: WeightSystem, rs1: RootSystem, rs2: RootSystem) -> MonomialLattice:
    """Generators ``F_i`` (weight omega_i) and ``F_{i,beta}`` (weight omega_i - beta)."""
    labels, blocks, weights = [], [], []
    for i, (parab, ws, rs) in enumerate(((parab1, ws1, rs1), (parab2, ws2, rs2))):
        omega = tuple(ws.highest)
        labels.append(f"F{i + 1}")
        blocks.append(i)
        weights.append(omega)
        for beta in parab.complement_roots:
            mu = tuple(o - b for o, b in zip(omega, rs.root_to_weight(beta)))
            if mu not in ws:
                raise AssertionError(f"omega - {beta} is not a weight of V{omega}")
            labels.append(f"F{i + 1}_b({root_label(beta)})")
            blocks.append(i)
            weights.append(mu)
    lattice = MonomialLattice(tuple(labels), tuple(blocks), tuple(weights),
                              (tuple(ws1.highest), tuple(ws2.highest)), (parab1.dim_x, parab2.dim_x))
    if lattice.rank != parab1.dim_x + parab2.dim_x + 2:
        raise AssertionError("monomial lattice rank differs from dim L")
    return lattice


@dataclass(frozen=True)
class WeightHom:
    D: tuple[tuple[int, ...], ...]
    block_sizes: tuple[int, int]

    def weight(self, m: Sequence[int], lam) -> GaussianRational:
        """``wt_lambda(m) = sum_j (m^T D)_j lambda_j``."""
        lam = gvec(lam)
        total = ZERO
        for c, lj in zip(matvec_left(m, self.D), lam):
            if c:
                total = total + lj * c
        return total

    def generator_weights(self, lam) -> list[GaussianRational]:
        n = len(self.D)
        return [self.weight([int(i == k) for i in range(n)], lam) for k in range(n)]


def weight_matrix(lattice: MonomialLattice, std1: StandardTorusData, std2: StandardTorusData) -> WeightHom:
    stds = (std1, std2)
    for i, std in enumerate(stds):
        if tuple(std.weights.highest) != lattice.highest[i]:
            raise ConfigurationError(f"standard data for block {i + 1} belongs to a different omega")
    n1, n2 = std1.n, std2.n
    rows = []
    for blk, mu in zip(lattice.blocks, lattice.generator_weights):
        row = stds[blk].row(mu)
        rows.append(tuple(row) + (0,) * n2 if blk == 0 else (0,) * n1 + tuple(row))
    return WeightHom(tuple(rows), (n1, n2))


@dataclass(frozen=True)
class KernelBasis:
    basis: tuple[tuple[int, ...], ...]
    mode: str

    @property
    def rank(self) -> int:
        return len(self.basis)

    def as_dict(self, labels: Sequence[str] | None = None) -> dict:
        out = {"mode": self.mode, "rank": self.rank, "basis": [list(v) for v in self.basis]}
        if labels is not None:
            out["labels"] = list(labels)
        return out


def kernel_generic(hom: WeightHom) -> KernelBasis:
    """Integer left kernel of D: monomials of weight zero for every lambda."""
    basis = left_integer_kernel([list(r) for r in hom.D])
    if len(basis) != len(hom.D) - rational_rank(hom.D):
        raise AssertionError("rank-nullity fails for the generic kernel")
    return KernelBasis(tuple(tuple(v) for v in basis), GENERIC)


def _cleared_columns(values: Sequence[GaussianRational]) -> list[list[int]]:
    """Rows ``(re, im)`` scaled per column to integers; kernels are unchanged."""
    den_re = lcm(*(v.re.denominator for v in values)) if values else 1
    den_im = lcm(*(v.im.denominator for v in values)) if values else 1
    return [[int(v.re * den_re), int(v.im * den_im)] for v in values]


def kernel_specific(hom: WeightHom, lam_s) -> KernelBasis:
    """Kernel for a fixed Gaussian-rational, weakly hyperbolic ``lambda_s``."""
    lam = gvec(lam_s)
    rep = is_weakly_hyperbolic(lam, *hom.block_sizes)
    if not rep.holds:
        raise HypothesisError(f"lambda_s is not weakly hyperbolic: {rep.reason}")
    weights = hom.generator_weights(lam)
    basis = left_integer_kernel(_cleared_columns(weights))
    return KernelBasis(tuple(tuple(v) for v in basis), SPECIFIC)


def image_rank(values: Sequence[GaussianRational]) -> int:
    """Rank of the subgroup of C generated by Gaussian-rational values."""
    return rational_rank([[Fraction(v.re), Fraction(v.im)] for v in values])


def verify_kernel(hom: WeightHom, kernel: KernelBasis, lam=None) -> bool:
    """Exact re-evaluation: every basis vector has weight zero."""
    if kernel.mode == GENERIC:
        return all(not any(matvec_left(v, hom.D)) for v in kernel.basis)
    return all(hom.weight(v, lam).is_zero() for v in kernel.basis)


@dataclass(frozen=True)
class TrDegReport:
    trdeg: int
    bound: int
    scalar_identity: bool
    verdict: str | None
    trace: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"trdeg": self.trdeg, "bound_dim_L_minus_2": self.bound,
                "equals_dim_S_minus_1": self.scalar_identity, "verdict": self.verdict,
                "trace": list(self.trace)}


def transcendence_degree(kernel: KernelBasis, dims: tuple[int, int], maximal=(False, False),
                         generators=(False, False), unipotent_zero: bool = False) -> TrDegReport:
    """``tr.deg = rank K``; the field verdict needs maximal parabolics, generators, lambda_u = 0."""
    dim_l = dims[0] + dims[1] + 2
    bound = dim_l - 2
    t = kernel.rank
    if t > bound:
        raise CbundleError(f"internal error: tr.deg {t} exceeds dim L - 2 = {bound}")
    dim_s = dims[0] + dims[1] + 1
    trace = []
    verdict = None
    if all(maximal) and all(generators) and unipotent_zero:
        trace.extend(["P_1, P_2 maximal", "L_i generate Pic(X_i)", "lambda_u = 0"])
        verdict = f"purely transcendental over C of degree {t}"
    return TrDegReport(t, bound, t == dim_s - 1, verdict, tuple(trace))
