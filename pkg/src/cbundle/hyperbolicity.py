"""Weak hyperbolicity, induced eigenvalues and the unipotent part of lambda.

All predicates are decided in exact Gaussian-rational arithmetic.  For two
numbers ``a, b`` in the half-plane ``{im > 0} u R_{>0}`` the argument order is
the sign of ``im(conj(a) * b)``, so no angle is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, HypothesisError
from .gaussian import ZERO, GaussianRational, gvec
from .rootdata import Root, RootSystem, Weight
from .standardize import StandardTorusData


def arg_less(a, b) -> bool:
    """``arg(a) < arg(b)`` for nonzero ``a, b`` with arguments in ``[0, pi)``."""
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    for x in (a, b):
        if x.is_zero():
            raise DomainError("arg_less is undefined at 0")
        if not x.in_upper_half_plane():
            raise DomainError(f"arg({x}) is outside [0, pi)")
    return a.re * b.im - a.im * b.re > 0


@dataclass(frozen=True)
class HyperbolicityReport:
    holds: bool
    block_type: tuple[int, int]
    witness: tuple | None = None  # 1-based (i, j) pair, or ("zero"|"half-plane", k)
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "type": list(self.block_type),
            "witness": list(self.witness) if self.witness else None,
            "reason": self.reason,
        }


def is_weakly_hyperbolic(lam: Sequence, n1: int, n2: int) -> HyperbolicityReport:
    """Decide ``0 <= arg(l_i) < arg(l_j) < pi`` for all ``i <= n1 < j``."""
    lam = gvec(lam)
    if len(lam) != n1 + n2:
        raise DomainError(f"expected {n1 + n2} entries, got {len(lam)}")
    btype = (n1, n2)
    for k, x in enumerate(lam, start=1):
        if x.is_zero():
            return HyperbolicityReport(False, btype, ("zero", k), f"lambda_{k} = 0")
    for k, x in enumerate(lam, start=1):
        if not x.in_upper_half_plane():
            return HyperbolicityReport(False, btype, ("half-plane", k),
                                       f"arg(lambda_{k}) = arg({x}) not in [0, pi)")
    for i in range(n1):
        for j in range(n1, n1 + n2):
            if not arg_less(lam[i], lam[j]):
                return HyperbolicityReport(
                    False, btype, (i + 1, j + 1),
                    f"arg(lambda_{i + 1}) >= arg(lambda_{j + 1})")
    return HyperbolicityReport(True, btype)


def block_hyperbolicity(values1: Sequence, values2: Sequence) -> HyperbolicityReport:
    """Same predicate on two explicit blocks (used for induced spectra).

    Only the extreme arguments matter, so this runs in linear time.
    """
    v1, v2 = gvec(values1), gvec(values2)
    btype = (len(v1), len(v2))
    for k, x in enumerate(v1 + v2, start=1):
        if x.is_zero():
            return HyperbolicityReport(False, btype, ("zero", k), "zero eigenvalue")
        if not x.in_upper_half_plane():
            return HyperbolicityReport(False, btype, ("half-plane", k), f"{x} outside [0, pi)")
    i_max = 0
    for i in range(1, len(v1)):
        if arg_less(v1[i_max], v1[i]):
            i_max = i
    j_min = 0
    for j in range(1, len(v2)):
        if arg_less(v2[j], v2[j_min]):
            j_min = j
    if v1 and v2 and not arg_less(v1[i_max], v2[j_min]):
        return HyperbolicityReport(False, btype, (i_max + 1, len(v1) + j_min + 1),
                                   "argument order violated")
    return HyperbolicityReport(True, btype)


# ---------------------------------------------------------------------------
# induced eigenvalues


def lambda_mu(std: StandardTorusData, lam_block: Sequence, mu: Weight) -> GaussianRational:
    """``lambda_mu = sum_j lambda_j d_{mu,j}`` over the block's l+1 coordinates."""
    lam_block = gvec(lam_block)
    if len(lam_block) != std.n:
        raise DomainError(f"block needs {std.n} entries, got {len(lam_block)}")
    row = std.row(mu)
    total = ZERO
    for lj, d in zip(lam_block, row):
        total = total + lj * d
    return total


@dataclass(frozen=True)
class InducedSpectrum:
    blocks: tuple  # per block: tuple of (weight, lambda_mu, multiplicity)
    report: HyperbolicityReport

    def expanded(self, block: int) -> list[GaussianRational]:
        return [val for _, val, m in self.blocks[block] for _ in range(m)]

    def as_dict(self) -> dict:
        return {
            "blocks": [[{"weight": list(w), "value": str(v), "multiplicity": m} for w, v, m in blk]
                       for blk in self.blocks],
            "induced_hyperbolicity": self.report.as_dict(),
        }


def induced_spectrum(std1: StandardTorusData, std2: StandardTorusData, lam_s: Sequence) -> InducedSpectrum:
    """The eigenvalues ``lambda_mu`` on V(omega1) x V(omega2) and their hyperbolicity."""
    lam_s = gvec(lam_s)
    n1, n2 = std1.n, std2.n
    base = is_weakly_hyperbolic(lam_s, n1, n2)
    if not base.holds:
        raise HypothesisError(f"lambda_s is not weakly hyperbolic of type ({n1},{n2}): {base.reason}")
    blocks = []
    for std, lam_block in ((std1, lam_s[:n1]), (std2, lam_s[n1:])):
        blocks.append(tuple((mu, lambda_mu(std, lam_block, mu), m)
                            for mu, m in std.weights.entries.items()))
    spec = InducedSpectrum(tuple(blocks), HyperbolicityReport(True, (0, 0)))
    report = block_hyperbolicity(spec.expanded(0), spec.expanded(1))
    return InducedSpectrum(tuple(blocks), report)


# ---------------------------------------------------------------------------
# the unipotent part


@dataclass(frozen=True)
class UnipotentTerm:
    block: int  # 0 or 1
    root: Root
    coeff: GaussianRational

    def as_dict(self) -> dict:
        return {"block": self.block + 1, "root": list(self.root), "coeff": str(self.coeff)}


def root_on_torus(rs: RootSystem, beta: Root, lam_block: Sequence) -> GaussianRational:
    """Value of the root ``beta`` on ``lambda_s`` restricted to one block.

    The enlarged torus maps onto T through ``t_j / t_{l+1}``, so a character with
    fundamental-weight coordinates ``b`` takes the value
    ``sum_j b_j (lambda_j - lambda_{l+1})``.  Equivalently
    ``lambda_{mu+beta} - lambda_mu``.
    """
    lam_block = gvec(lam_block)
    b = rs.root_to_weight(beta)
    last = lam_block[rs.rank]
    total = ZERO
    for bj, lj in zip(b, lam_block[: rs.rank]):
        if bj:
            total = total + (lj - last) * bj
    return total


@dataclass(frozen=True)
class LambdaParam:
    block_sizes: tuple[int, int]
    semisimple: tuple[GaussianRational, ...]
    unipotent: tuple[UnipotentTerm, ...] = field(default=())

    def block(self, i: int) -> tuple[GaussianRational, ...]:
        n1 = self.block_sizes[0]
        return self.semisimple[:n1] if i == 0 else self.semisimple[n1:]

    def hyperbolicity(self) -> HyperbolicityReport:
        return is_weakly_hyperbolic(self.semisimple, *self.block_sizes)


def make_lambda(semisimple: Sequence, block_sizes: tuple[int, int], unipotent=(),
                root_systems: Sequence[RootSystem | None] = (None, None)) -> LambdaParam:
    """Build and validate a LambdaParam.

    ``unipotent`` items are ``UnipotentTerm`` or ``(block, root, coeff)`` with a
    0-based block index.  Each nonzero term must commute with the semisimple
    part, i.e. its root must vanish on ``lambda_s`` of that block.
    """
    lam = gvec(semisimple)
    n1, n2 = block_sizes
    if len(lam) != n1 + n2:
        raise DomainError(f"lambda_s has {len(lam)} entries, block sizes {block_sizes}")
    terms = []
    for t in unipotent:
        if not isinstance(t, UnipotentTerm):
            blk, root, c = t
            t = UnipotentTerm(int(blk), tuple(int(x) for x in root), GaussianRational.coerce(c))
        if t.block not in (0, 1):
            raise DomainError(f"unipotent block index {t.block} must be 0 or 1")
        rs = root_systems[t.block]
        if rs is None:
            raise DomainError("unipotent terms need a flag-variety factor with root data")
        if not rs.is_root(t.root):
            raise DomainError(f"{t.root} is not a positive root of factor {t.block + 1}")
        if not t.coeff.is_zero():
            blk_lam = lam[:n1] if t.block == 0 else lam[n1:]
            val = root_on_torus(rs, t.root, blk_lam)
            if not val.is_zero():
                raise DomainError(
                    f"unipotent term on root {t.root} does not commute with lambda_s: "
                    f"beta(lambda_s) = {val}")
        terms.append(t)
    return LambdaParam((n1, n2), lam, tuple(terms))


@dataclass(frozen=True)
class ScaledUnipotent:
    terms: tuple[UnipotentTerm, ...]
    epsilon: GaussianRational
    degenerate: bool


def scale_unipotent(terms: Sequence[UnipotentTerm], epsilon) -> ScaledUnipotent:
    """Conjugate by the torus element with every simple root equal to ``epsilon``.

    ``c_beta`` becomes ``epsilon**|beta| * c_beta`` where ``|beta|`` is the height.
    """
    eps = GaussianRational.coerce(epsilon)
    out = tuple(UnipotentTerm(t.block, t.root, t.coeff * eps ** sum(t.root)) for t in terms)
    return ScaledUnipotent(out, eps, eps.is_zero())
