"""The holomorphic C-action on V(omega1) x V(omega2) and its orbit geometry.

A ``FlowSpec`` stores one eigenvalue ``lambda_mu`` per basis vector and a
nilpotent matrix commuting with the diagonal part, so that

    flow(z) p = exp(z * diag(lambda)) exp(z * N) p.

Norms are handled in log space throughout; ``|z|`` up to a few hundred does
not overflow.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import factorial

import numpy as np

from .errors import ConfigurationError, DomainError, SolverFailure
from .gaussian import GaussianRational, gvec
from .hyperbolicity import LambdaParam, block_hyperbolicity, lambda_mu
from .realization import Realization
from .standardize import StandardTorusData


@dataclass(frozen=True)
class FlowTolerances:
    tol: float = 1e-9
    agree: float = 1e-6
    jac_min: float = 1e-8
    max_iter: int = 100
    grid: int = 5
    grid_radius: float = 3.0


DEFAULT_TOLERANCES = FlowTolerances()


@dataclass(frozen=True, eq=False)
class FlowSpec:
    lam: np.ndarray  # complex, one lambda_mu per basis vector
    nilpotent: np.ndarray  # complex r x r, block diagonal
    blocks: tuple[int, int]
    exact_lambda: tuple | None = None  # GaussianRational per basis vector when known

    def __post_init__(self):
        r = sum(self.blocks)
        if self.lam.shape != (r,) or self.nilpotent.shape != (r, r):
            raise ConfigurationError("flow spec shapes do not match the block sizes")
        r1 = self.blocks[0]
        if np.any(self.nilpotent[:r1, r1:]) or np.any(self.nilpotent[r1:, :r1]):
            raise ConfigurationError("nilpotent part must be block diagonal")
        if self.exact_lambda is not None:
            rows, cols = np.nonzero(self.nilpotent)
            for i, j in zip(rows, cols):
                if self.exact_lambda[i] != self.exact_lambda[j]:
                    raise ConfigurationError("nilpotent part does not commute with the diagonal")
        if _nilpotent_powers(self.nilpotent) is None:
            raise ConfigurationError("unipotent part is not nilpotent")

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    def split(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return v[: self.blocks[0]], v[self.blocks[0]:]

    def with_nilpotent(self, nil: np.ndarray) -> "FlowSpec":
        return FlowSpec(self.lam, np.asarray(nil, dtype=complex), self.blocks, self.exact_lambda)

    def hyperbolicity(self):
        """Weak hyperbolicity of the induced spectrum (exact when available)."""
        if self.exact_lambda is None:
            raise DomainError("exact eigenvalues unknown; build it from Gaussian rationals")
        r1 = self.blocks[0]
        return block_hyperbolicity(self.exact_lambda[:r1], self.exact_lambda[r1:])

    @classmethod
    def diagonal(cls, values1, values2, nilpotent=None) -> "FlowSpec":
        """Spec from explicit eigenvalues; Gaussian-rational input is kept exactly."""
        vals = list(values1) + list(values2)
        try:
            exact = gvec(vals)
            lam = np.array([complex(x) for x in exact])
        except (TypeError, ValueError):
            exact = None
            lam = np.array([complex(x) for x in vals])
        r = len(vals)
        nil = np.zeros((r, r), dtype=complex) if nilpotent is None else np.asarray(nilpotent, dtype=complex)
        return cls(lam, nil, (len(values1), len(values2)), exact)


def _nilpotent_powers(m: np.ndarray) -> list[np.ndarray] | None:
    """``[N, N^2, ...]`` up to the last nonzero power, or None if N is not nilpotent."""
    powers = []
    cur = m
    for _ in range(len(m)):
        if not np.any(np.abs(cur) > 0):
            return powers
        powers.append(cur)
        cur = cur @ m
    return powers if not np.any(np.abs(cur) > 0) else None


def flow_spec(std1: StandardTorusData, std2: StandardTorusData, lam: LambdaParam,
              real1: Realization | None = None, real2: Realization | None = None) -> FlowSpec:
    """Spec on the realizations' bases (or on weight-ordered bases when absent)."""
    exact = []
    nil_blocks = []
    for idx, (std, real) in enumerate(((std1, real1), (std2, real2))):
        basis = real.basis_weights if real is not None else tuple(std.weights.expanded())
        block = lam.block(idx)
        exact.extend(lambda_mu(std, block, mu) for mu in basis)
        r = len(basis)
        nil = np.zeros((r, r), dtype=complex)
        for term in lam.unipotent:
            if term.block != idx or term.coeff.is_zero():
                continue
            if real is None:
                raise ConfigurationError(
                    f"factor {idx + 1} has no matrix realization; unipotent terms need one")
            nil = nil + complex(term.coeff) * real.op_X[term.root]
        nil_blocks.append(nil)
    r1, r2 = len(nil_blocks[0]), len(nil_blocks[1])
    full = np.zeros((r1 + r2, r1 + r2), dtype=complex)
    full[:r1, :r1] = nil_blocks[0]
    full[r1:, r1:] = nil_blocks[1]
    return FlowSpec(np.array([complex(x) for x in exact]), full, (r1, r2), tuple(exact))


# ---------------------------------------------------------------------------
# the flow


def _unipotent(spec: FlowSpec, z: complex, p: np.ndarray) -> np.ndarray:
    out = np.array(p, dtype=complex)
    for k, nk in enumerate(_nilpotent_powers(spec.nilpotent), start=1):
        out = out + (z ** k / factorial(k)) * (nk @ p)
    return out


def flow_point(spec: FlowSpec, p, z: complex) -> np.ndarray:
    p = np.asarray(p, dtype=complex)
    return np.exp(z * spec.lam) * _unipotent(spec, z, p)


def fundamental_field(spec: FlowSpec, p) -> np.ndarray:
    """d/dz at z = 0 of the flow through ``p``."""
    p = np.asarray(p, dtype=complex)
    return spec.lam * p + spec.nilpotent @ p


def _block_log_norm(lam: np.ndarray, q: np.ndarray, z: complex, nil: np.ndarray):
    """``log ||p(z)||`` and ``d/dx, d/dy`` of it for one block, ``q = exp(zN) p``."""
    mask = q != 0
    if not np.any(mask):
        raise DomainError("block vanishes along the flow")
    expo = z * lam[mask]
    shift = float(np.max(expo.real + np.log(np.abs(q[mask]))))
    w = np.zeros(len(q), dtype=complex)
    w[mask] = np.exp(expo - shift) * q[mask]
    nrm2 = float(np.vdot(w, w).real)
    # N commutes with the diagonal, so d/dz p(z) = (D + N) p(z)
    m_w = lam * w + nil @ w
    inner = np.vdot(w, m_w)
    return shift + 0.5 * np.log(nrm2), inner.real / nrm2, -inner.imag / nrm2


def log_norms(spec: FlowSpec, p, z: complex) -> tuple[np.ndarray, np.ndarray]:
    """``g = (log||p1(z)||, log||p2(z)||)`` and its 2x2 Jacobian in ``(Re z, Im z)``."""
    p = np.asarray(p, dtype=complex)
    q = _unipotent(spec, z, p)
    r1 = spec.blocks[0]
    g = np.zeros(2)
    jac = np.zeros((2, 2))
    for b, sl in enumerate((slice(0, r1), slice(r1, None))):
        g[b], jac[b, 0], jac[b, 1] = _block_log_norm(spec.lam[sl], q[sl], z, spec.nilpotent[sl, sl])
    return g, jac


# ---------------------------------------------------------------------------
# solving for the intersection with S(L)


@dataclass(frozen=True)
class OrbitSolveResult:
    z_star: complex
    iterations: int
    residual: tuple[float, float]
    unique: bool
    transversal: bool
    jacobian_det: float
    converged_starts: int = 0
    roots: tuple = field(default=(), repr=False)

    def as_dict(self) -> dict:
        return {
            "z_star": [self.z_star.real, self.z_star.imag],
            "iterations": self.iterations,
            "residual": list(self.residual),
            "unique": self.unique,
            "transversal": self.transversal,
            "jacobian_det": self.jacobian_det,
            "converged_starts": self.converged_starts,
        }


def _newton(spec: FlowSpec, p: np.ndarray, z0: complex, tols: FlowTolerances):
    z = complex(z0)
    g, jac = log_norms(spec, p, z)
    merit = float(g @ g)
    singular = False
    for it in range(1, tols.max_iter + 1):
        if np.max(np.abs(g)) < tols.tol * 1e-3:
            return z, it - 1, False
        det = np.linalg.det(jac)
        if abs(det) < 1e-14:
            singular = True
            break
        step = np.linalg.solve(jac, -g)
        t = 1.0
        while t > 1e-8:
            zn = z + t * complex(step[0], step[1])
            gn, jn = log_norms(spec, p, zn)
            mn = float(gn @ gn)
            if mn < merit or mn == 0.0:
                break
            t *= 0.5
        else:
            break
        z, g, jac, merit = zn, gn, jn, mn
    ok = np.max(np.abs(g)) < tols.tol * 1e-2
    return (z, tols.max_iter, False) if ok else (None, tols.max_iter, singular)


def _residual(spec: FlowSpec, p, z) -> tuple[float, float]:
    g, _ = log_norms(spec, p, z)
    return tuple(float(abs(np.expm1(x))) for x in g)


def start_grid(tols: FlowTolerances = DEFAULT_TOLERANCES) -> list[complex]:
    ax = np.linspace(-tols.grid_radius, tols.grid_radius, tols.grid)
    return [complex(x, y) for x in ax for y in ax]


def solve_orbit_intersection(spec: FlowSpec, p, tols: FlowTolerances = DEFAULT_TOLERANCES,
                             starts=None) -> OrbitSolveResult:
    """Find ``z`` with ``flow(z) p`` on ``S(L1) x S(L2)`` by multi-start damped Newton."""
    p = np.asarray(p, dtype=complex)
    p1, p2 = spec.split(p)
    if not np.any(p1) or not np.any(p2):
        raise DomainError("both blocks of p must be nonzero")
    starts = start_grid(tols) if starts is None else list(starts)
    roots, iters = [], []
    singular = 0
    for s in starts:
        z, it, sing = _newton(spec, p, s, tols)
        singular += sing
        if z is not None:
            roots.append(z)
            iters.append(it)
    if not roots:
        if singular:
            raise SolverFailure("degenerate: the 2x2 Jacobian is singular along the orbit "
                                "(lambda is not weakly hyperbolic?)")
        raise SolverFailure("Newton did not converge from any start")
    z_star = roots[0]
    unique = all(abs(z - z_star) < tols.agree for z in roots)
    _, jac = log_norms(spec, p, z_star)
    det = float(np.linalg.det(jac))
    return OrbitSolveResult(
        z_star=z_star,
        iterations=max(iters),
        residual=_residual(spec, p, z_star),
        unique=unique,
        transversal=abs(det) > tols.jac_min,
        jacobian_det=det,
        converged_starts=len(roots),
        roots=tuple(roots),
    )


def transversality_jacobian(spec: FlowSpec, p, z: complex, on_tol: float = 1e-7) -> float:
    """``det d(nu1, nu2)/d(Re z, Im z)`` at a point of the orbit lying on S(L)."""
    if max(_residual(spec, p, z)) > on_tol:
        raise DomainError("flow(z) p is not on S(L1) x S(L2)")
    _, jac = log_norms(spec, p, z)
    # at unit norm d||p_i|| = ||p_i|| d log||p_i|| = d log||p_i||
    return float(np.linalg.det(jac))


# ---------------------------------------------------------------------------
# freeness and properness


@dataclass(frozen=True)
class FreenessReport:
    pairs: int
    min_margin: float
    suspect: tuple  # indices of (p, z) pairs with margin < 1e-12

    def as_dict(self) -> dict:
        return {"pairs": self.pairs, "min_margin": self.min_margin, "suspect": list(self.suspect)}


def random_nonzero_z(rng: np.random.Generator, n: int, lo: float = 1e-3, hi: float = 10.0) -> list[complex]:
    mods = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    phases = rng.uniform(0, 2 * np.pi, n)
    return [complex(m * np.cos(t), m * np.sin(t)) for m, t in zip(mods, phases)]


def check_freeness(spec: FlowSpec, samples, z_samples) -> FreenessReport:
    """Relative displacement ``||flow(z) p - p|| / ||p||`` over paired samples."""
    margins = []
    for p, z in zip(samples, z_samples):
        if z == 0:
            raise DomainError("z = 0 is excluded")
        p = np.asarray(p, dtype=complex)
        margins.append(float(np.linalg.norm(flow_point(spec, p, z) - p) / np.linalg.norm(p)))
    suspect = tuple(i for i, m in enumerate(margins) if m < 1e-12)
    return FreenessReport(len(margins), min(margins) if margins else float("inf"), suspect)


@dataclass(frozen=True)
class DivergenceReport:
    radii: tuple
    spreads: tuple  # per direction: max_i |log||p_i(z)|| - log||p_i||| at each radius
    bounded_directions: tuple  # directions (radians) with no growth in spread
    proper: bool

    def as_dict(self) -> dict:
        return {"radii": list(self.radii), "spreads": [list(s) for s in self.spreads],
                "bounded_directions": list(self.bounded_directions), "proper": self.proper}


def divergence_check(spec: FlowSpec, p, directions, radii=(10.0, 20.0, 40.0)) -> DivergenceReport:
    """Along each ray, some block norm must tend to 0 or infinity."""
    p = np.asarray(p, dtype=complex)
    g0, _ = log_norms(spec, p, 0j)
    spreads, bounded = [], []
    for theta in directions:
        row = []
        for rad in radii:
            g, _ = log_norms(spec, p, rad * np.exp(1j * theta))
            row.append(float(np.max(np.abs(g - g0))))
        spreads.append(tuple(row))
        growing = all(b > a for a, b in zip(row, row[1:]))
        if not (growing and row[-1] > 1.0):
            bounded.append(float(theta))
    return DivergenceReport(tuple(radii), tuple(spreads), tuple(bounded), not bounded)


# ---------------------------------------------------------------------------
# experiments


def thread_count() -> int:
    raw = os.environ.get("CBUNDLE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigurationError(f"CBUNDLE_THREADS must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class OrbitRow:
    seed: int
    z_re: float
    z_im: float
    residual1: float
    residual2: float
    det: float
    unique: bool
    transversal: bool
    converged: bool
    error: str = ""


def _solve_row(spec: FlowSpec, seed: int, p, tols: FlowTolerances) -> OrbitRow:
    try:
        res = solve_orbit_intersection(spec, p, tols)
    except SolverFailure as exc:
        nan = float("nan")
        return OrbitRow(seed, nan, nan, nan, nan, nan, False, False, False, str(exc))
    ok = max(res.residual) < tols.tol
    return OrbitRow(seed, res.z_star.real, res.z_star.imag, res.residual[0], res.residual[1],
                    res.jacobian_det, res.unique, res.transversal, ok)


def orbit_experiment(spec: FlowSpec, points, seeds, tols: FlowTolerances = DEFAULT_TOLERANCES) -> list[OrbitRow]:
    """Solve for every sample; rows come back in input order regardless of threading."""
    jobs = list(zip(seeds, points))
    n = thread_count()
    if n == 1:
        return [_solve_row(spec, s, p, tols) for s, p in jobs]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda job: _solve_row(spec, job[0], job[1], tols), jobs))


def summarize_rows(rows: list[OrbitRow]) -> dict:
    n = len(rows)
    good = [r for r in rows if r.converged and r.unique and r.transversal]
    dets = [abs(r.det) for r in rows if r.converged]
    res = [max(r.residual1, r.residual2) for r in rows if r.converged]
    return {
        "samples": n,
        "converged": sum(r.converged for r in rows),
        "unique": sum(r.unique for r in rows),
        "transversal": sum(r.transversal for r in rows),
        "success_rate": len(good) / n if n else 1.0,
        "min_abs_det": min(dets) if dets else None,
        "max_residual": max(res) if res else None,
    }


def rows_to_csv(rows: list[OrbitRow]) -> str:
    buf = io.StringIO()
    names = list(OrbitRow.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        d = asdict(r)
        for k in ("z_re", "z_im", "residual1", "residual2", "det"):
            d[k] = repr(d[k])
        writer.writerow(d)
    return buf.getvalue()


@dataclass(frozen=True)
class EpsilonSweep:
    epsilons: tuple
    success_rates: tuple
    threshold: float
    monotone: bool

    def as_dict(self) -> dict:
        return {"epsilons": list(self.epsilons), "success_rates": list(self.success_rates),
                "threshold": self.threshold, "monotone": self.monotone}


def epsilon_sweep(base: FlowSpec, terms, points,
                  epsilons=(1.0, 0.5, 0.25, 0.125, 0.0625, 0.0),
                  tols: FlowTolerances = DEFAULT_TOLERANCES, bisect_steps: int = 6) -> EpsilonSweep:
    """Success rate of the orbit solver as the unipotent part is scaled.

    ``terms`` are ``(matrix, height)`` pairs; each is multiplied by
    ``eps**height``.  The threshold is the largest ``eps`` such that every
    tested value up to it reaches 100% success, refined by bisection between
    the last success and the first failure.
    """
    terms = [(np.asarray(m, dtype=complex), int(h)) for m, h in terms]
    pts = list(points)

    def rate(eps: float) -> float:
        nil = sum((eps ** h * m for m, h in terms), np.zeros_like(base.nilpotent))
        spec = base.with_nilpotent(nil)
        rows = orbit_experiment(spec, pts, range(len(pts)), tols)
        return summarize_rows(rows)["success_rate"]

    eps_sorted = sorted(set(float(e) for e in epsilons))
    rates = {e: rate(e) for e in eps_sorted}
    threshold = 0.0
    first_fail = None
    for e in eps_sorted:
        if rates[e] == 1.0:
            threshold = e
        else:
            first_fail = e
            break
    if first_fail is not None:
        lo, hi = threshold, first_fail
        for _ in range(bisect_steps):
            mid = 0.5 * (lo + hi)
            rates[mid] = rate(mid)
            if rates[mid] == 1.0:
                lo = mid
            else:
                hi = mid
        threshold = lo
    ordered = sorted(rates)
    vals = [rates[e] for e in ordered]
    monotone = all(b <= a for a, b in zip(vals, vals[1:]))
    return EpsilonSweep(tuple(ordered), tuple(vals), threshold, monotone)
