"""Weight-graded matrix models of V(omega) for type A.

Two families are built exactly (integer matrices):

* ``sl2_irrep(k)``: basis ``u_j = Y^j v0`` of V(k), ``j = 0..k``;
* ``sln_wedge(n, k)``: basis ``e_S`` of the k-th exterior power of C^n, ``S``
  running over k-subsets in lexicographic order, highest vector
  ``e_1 ^ ... ^ e_k``.

Lie algebra elements act on linear functionals by composition,
``(xi . F)(v) = F(xi v)``; this is the derivative of ``F`` along the vector
field generated by ``xi`` and fixes all signs in the big-cell chart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

import numpy as np
import scipy.linalg

from .errors import ChartError, DomainError
from .rootdata import ParabolicData, Root, RootSystem, Weight, build_root_system


@dataclass(frozen=True, eq=False)
class Realization:
    rs: RootSystem
    omega: Weight
    basis_weights: tuple[Weight, ...]
    op_X: dict  # positive root -> integer matrix
    op_Y: dict
    op_H: dict
    highest_index: int = 0
    labels: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis_weights)

    @property
    def v0(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.highest_index] = 1.0
        return v

    def chevalley_defects(self) -> list[str]:
        """Exact violations of the Chevalley relations (empty list when valid)."""
        bad = []
        simple = self.rs.simple_roots
        for b in self.rs.positive_roots:
            X, Y, H = self.op_X[b], self.op_Y[b], self.op_H[b]
            if not np.array_equal(X @ Y - Y @ X, H):
                bad.append(f"[X,Y] != H for {b}")
            diag = [self.rs.pair_with_coroot(mu, b) for mu in self.basis_weights]
            if not np.array_equal(H, np.diag(diag)):
                bad.append(f"H_{b} diagonal is not <mu, beta^vee>")
        for b in simple:
            for c in simple:
                if b != c and np.any(self.op_X[b] @ self.op_Y[c] - self.op_Y[c] @ self.op_X[b]):
                    bad.append(f"[X_{b}, Y_{c}] != 0")
        for b in self.rs.positive_roots:
            bw = self.rs.root_to_weight(b)
            for src, mu in enumerate(self.basis_weights):
                up = tuple(m + x for m, x in zip(mu, bw))
                dn = tuple(m - x for m, x in zip(mu, bw))
                for tgt in np.nonzero(self.op_X[b][:, src])[0]:
                    if self.basis_weights[tgt] != up:
                        bad.append(f"X_{b} does not raise weight {mu}")
                for tgt in np.nonzero(self.op_Y[b][:, src])[0]:
                    if self.basis_weights[tgt] != dn:
                        bad.append(f"Y_{b} does not lower weight {mu}")
        return bad


def sl2_irrep(k: int) -> Realization:
    """V(k) for sl2 with ``Y u_j = u_{j+1}`` and ``X u_j = j(k-j+1) u_{j-1}``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("sl2_irrep needs k >= 1 (k = 0 is the trivial representation)")
    r = k + 1
    X = np.zeros((r, r), dtype=np.int64)
    Y = np.zeros((r, r), dtype=np.int64)
    for j in range(r - 1):
        Y[j + 1, j] = 1
        X[j, j + 1] = (j + 1) * (k - j)
    H = np.diag([k - 2 * j for j in range(r)]).astype(np.int64)
    rs = build_root_system("A", 1)
    alpha = (1,)
    weights = tuple((k - 2 * j,) for j in range(r))
    return Realization(rs, (k,), weights, {alpha: X}, {alpha: Y}, {alpha: H}, 0,
                       tuple(f"u{j}" for j in range(r)))


def _wedge_apply(subset: tuple[int, ...], src: int, dst: int):
    """E_{dst,src} on e_S: returns (sign, new subset) or None."""
    if src not in subset or (dst != src and dst in subset):
        return None
    if dst == src:
        return 1, subset
    lst = [dst if s == src else s for s in subset]
    # sign of the permutation sorting lst
    sign = 1
    for a in range(len(lst)):
        for b in range(a + 1, len(lst)):
            if lst[a] > lst[b]:
                sign = -sign
    return sign, tuple(sorted(lst))


def sln_wedge(n: int, k: int) -> Realization:
    """Exterior power Lambda^k C^n as the sl_n module V(varpi_k)."""
    if not (isinstance(n, int) and isinstance(k, int)) or n < 2 or n > 6:
        raise DomainError("sln_wedge supports 2 <= n <= 6")
    if not 1 <= k < n:
        raise DomainError(f"k must satisfy 1 <= k < n, got k={k}, n={n}")
    rs = build_root_system("A", n - 1)
    basis = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(basis)}
    r = len(basis)

    def elementary(dst: int, src: int) -> np.ndarray:
        m = np.zeros((r, r), dtype=np.int64)
        for col, s in enumerate(basis):
            hit = _wedge_apply(s, src, dst)
            if hit:
                sign, t = hit
                m[index[t], col] += sign
        return m

    op_X, op_Y, op_H = {}, {}, {}
    for beta in rs.positive_roots:
        nz = [i for i, c in enumerate(beta) if c]
        a, b = nz[0], nz[-1] + 1  # beta = eps_a - eps_b
        op_X[beta] = elementary(a, b)
        op_Y[beta] = elementary(b, a)
        op_H[beta] = elementary(a, a) - elementary(b, b)

    def weight(s):
        return tuple(int(j in s) - int(j + 1 in s) for j in range(n - 1))

    omega = tuple(int(j == k - 1) for j in range(n - 1))
    labels = tuple("e" + "".join(str(i + 1) for i in s) for s in basis)
    return Realization(rs, omega, tuple(weight(s) for s in basis), op_X, op_Y, op_H,
                       index[tuple(range(k))], labels)


def realization_for(rs: RootSystem, omega) -> Realization | None:
    """A matrix model of V(omega) when one of the built-in families applies."""
    omega = tuple(omega)
    if rs.series != "A":
        return None
    if rs.rank == 1 and omega[0] >= 1:
        return sl2_irrep(omega[0])
    if sum(omega) == 1 and rs.rank + 1 <= 6:
        return sln_wedge(rs.rank + 1, omega.index(1) + 1)
    return None


# ---------------------------------------------------------------------------
# matrix exponential and cone points


def matrix_exp(m: np.ndarray) -> np.ndarray:
    """exp(m); a finite sum when ``m`` is strictly triangular, else scaling-squaring."""
    m = np.asarray(m, dtype=complex)
    if not np.any(np.tril(m)) or not np.any(np.triu(m)):
        out = np.eye(len(m), dtype=complex)
        term = np.eye(len(m), dtype=complex)
        for j in range(1, len(m)):
            term = term @ m
            if not np.any(term):
                break
            out = out + term / factorial(j)
        return out
    return scipy.linalg.expm(m)


@dataclass(frozen=True, eq=False)
class ConePoint:
    coords: np.ndarray
    recipe: dict  # {"X": {root: c}, "Y": {...}, "H": {...}, "scalar": c}


def lie_element(real: Realization, xs=None, ys=None, hs=None) -> np.ndarray:
    xi = np.zeros((real.dim, real.dim), dtype=complex)
    for table, ops in ((xs, real.op_X), (ys, real.op_Y), (hs, real.op_H)):
        for beta, c in (table or {}).items():
            xi = xi + c * ops[tuple(beta)]
    return xi


def cone_point(real: Realization, scalar=1.0, xs=None, ys=None, hs=None) -> ConePoint:
    """``exp(xi) . (scalar * v0)``: a point on the cone over G/P."""
    if scalar == 0:
        raise DomainError("cone points need a nonzero scalar")
    xi = lie_element(real, xs, ys, hs)
    coords = matrix_exp(xi) @ (scalar * real.v0)
    recipe = {"X": dict(xs or {}), "Y": dict(ys or {}), "H": dict(hs or {}), "scalar": scalar}
    return ConePoint(coords, recipe)


def _complex_uniform(rng: np.random.Generator, scale: float) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def sample_cone_point(real: Realization, scale: float, rng_seed) -> ConePoint:
    """Random cone point; ``rng_seed`` is an int or a ``numpy.random.Generator``."""
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    roots = real.rs.positive_roots
    xs = {b: _complex_uniform(rng, scale) for b in roots}
    ys = {b: _complex_uniform(rng, scale) for b in roots}
    hs = {b: _complex_uniform(rng, scale) for b in real.rs.simple_roots}
    modulus = rng.uniform(0.5, 2.0)
    scalar = modulus * np.exp(1j * rng.uniform(0, 2 * np.pi))
    return cone_point(real, scalar, xs, ys, hs)


# ---------------------------------------------------------------------------
# big cell


@dataclass(frozen=True, eq=False)
class BigCellChart:
    real: Realization
    parab: ParabolicData
    F: np.ndarray  # row functional with F(v0) = 1
    F_beta: dict  # root -> row functional F o X_beta

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.parab.complement_roots

    def point(self, y: dict | np.ndarray, z: complex) -> np.ndarray:
        """``prod_beta exp(y_beta Y_beta) . (z v0)`` in the fixed root order."""
        if not isinstance(y, dict):
            y = dict(zip(self.roots, y))
        v = z * self.real.v0
        for beta in reversed(self.roots):
            v = matrix_exp(y.get(beta, 0) * self.real.op_Y[beta]) @ v
        return v

    def coordinates(self, v: np.ndarray) -> tuple[np.ndarray, complex]:
        """``(F_beta(v) / F(v) for beta in R_P, F(v))``."""
        f = complex(self.F @ v)
        if abs(f) == 0.0:
            raise ChartError("F vanishes: point is outside the big cell")
        return np.array([complex(self.F_beta[b] @ v) / f for b in self.roots]), f

    def lowest_defects(self) -> list:
        """Positive roots whose Y does not annihilate F."""
        return [b for b in self.real.rs.positive_roots if np.any(self.F @ self.real.op_Y[b])]


def big_cell_chart(real: Realization, parab: ParabolicData) -> BigCellChart:
    """The functional ``F = v0^dual`` and ``F_beta = X_beta(F)`` for beta in R_P."""
    if len(parab.levi_simples) != sum(1 for x in real.omega if x == 0) or \
            any(real.omega[j] != 0 for j in parab.levi_simples):
        raise DomainError("parabolic does not come from the realization's highest weight")
    hw = [i for i, w in enumerate(real.basis_weights) if w == tuple(real.omega)]
    if len(hw) != 1:
        raise AssertionError("highest weight line is not one-dimensional")
    F = np.zeros(real.dim)
    F[real.highest_index] = 1.0
    F_beta = {b: F @ real.op_X[b] for b in parab.complement_roots}
    chart = BigCellChart(real, parab, F, F_beta)
    if chart.lowest_defects():
        raise AssertionError("F is not annihilated by every Y_beta")
    return chart


@dataclass(frozen=True)
class JacobianCheck:
    jacobian: np.ndarray
    expected: np.ndarray
    max_deviation: float


def jacobian_check(real: Realization, parab: ParabolicData, y, z: complex, h: float = 1e-5,
                   chart: BigCellChart | None = None) -> JacobianCheck:
    """Central differences of ``F_gamma / F`` in the chart coordinates ``y_beta``.

    Lemma: the Jacobian is ``diag(<omega, beta^vee>)``, constant on the big cell.
    """
    chart = chart or big_cell_chart(real, parab)
    roots = chart.roots
    y = np.asarray([y[b] for b in roots] if isinstance(y, dict) else y, dtype=complex)
    if z == 0:
        raise ChartError("z = 0 lies outside the big cell")
    k = len(roots)
    jac = np.zeros((k, k), dtype=complex)
    for col in range(k):
        step = np.zeros(k, dtype=complex)
        step[col] = h
        plus, _ = chart.coordinates(chart.point(y + step, z))
        minus, _ = chart.coordinates(chart.point(y - step, z))
        jac[:, col] = (plus - minus) / (2 * h)
    expected = np.diag([float(real.rs.pair_with_coroot(real.omega, b)) for b in roots])
    return JacobianCheck(jac, expected, float(np.max(np.abs(jac - expected))) if k else 0.0)
