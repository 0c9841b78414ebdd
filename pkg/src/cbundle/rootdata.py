"""Classical root systems, weight systems and parabolic complements.

Conventions
-----------
* Weights are integer tuples in the fundamental-weight basis.
* Roots are integer tuples of coefficients over the simple roots.
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so the simple root ``alpha_i`` has
  fundamental-weight coordinates ``cartan[i]``.
* Indices of simple roots are 0-based in code (``alpha_1`` is index 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ConfigurationError, DomainError

Weight = tuple[int, ...]
Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _simple_root_vectors(series: str, rank: int) -> list[list[int]]:
    """Simple roots in the orthonormal epsilon basis of the defining realization."""
    if series == "A":
        dim = rank + 1
    else:
        dim = rank
    vecs = []
    for i in range(rank - 1):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        vecs.append(v)
    last = [0] * dim
    if series == "A":
        last[rank - 1], last[rank] = 1, -1
    elif series == "B":
        last[rank - 1] = 1
    elif series == "C":
        last[rank - 1] = 2
    else:  # D
        last[rank - 2], last[rank - 1] = 1, 1
    vecs.append(last)
    return vecs


def _expected_positive_count(series: str, rank: int) -> int:
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
    }[series]


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    # (alpha_i, alpha_i) in the normalization where long roots of A/D have length^2 2
    simple_lengths: tuple[int, ...]

    @property
    def fundamental_weight_count(self) -> int:
        return self.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    @cached_property
    def _cartan_inverse(self) -> list[list[Fraction]]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for c in range(n):
            piv = next(i for i in range(c, n) if m[i][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            p = m[c][c]
            m[c] = [x / p for x in m[c]]
            for i in range(n):
                if i != c and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return [row[n:] for row in m]

    @cached_property
    def _weight_gram(self) -> list[list[Fraction]]:
        # (w_i, w_j) = (C^{-1})_{ij} * (alpha_j, alpha_j) / 2
        inv = self._cartan_inverse
        return [[inv[i][j] * Fraction(self.simple_lengths[j], 2) for j in range(self.rank)]
                for i in range(self.rank)]

    # -- elementary operations --------------------------------------
    def is_root(self, beta: Root) -> bool:
        return tuple(beta) in self._root_set

    def height(self, beta: Root) -> int:
        return sum(beta)

    def root_to_weight(self, beta: Root) -> Weight:
        """Fundamental-weight coordinates of ``sum_i beta_i alpha_i``."""
        return tuple(sum(beta[i] * self.cartan[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def inner(self, mu: Iterable, nu: Iterable) -> Fraction:
        """Invariant form on weights given in fundamental-weight coordinates."""
        mu, nu = tuple(mu), tuple(nu)
        g = self._weight_gram
        return sum((mu[i] * g[i][j] * nu[j] for i in range(self.rank) for j in range(self.rank)
                    if mu[i] and nu[j]), Fraction(0))

    def weight_dot_root(self, mu: Weight, beta: Root) -> Fraction:
        """``(mu, beta)`` for a weight ``mu`` and a root in simple-root coordinates."""
        return sum((Fraction(beta[i] * mu[i] * self.simple_lengths[i], 2) for i in range(self.rank)),
                   Fraction(0))

    def root_norm2(self, beta: Root) -> Fraction:
        return self.weight_dot_root(self.root_to_weight(beta), beta)

    def pair_with_coroot(self, mu: Weight, beta: Root) -> int:
        """``<mu, beta^vee>`` for ``beta`` a positive root."""
        beta = tuple(beta)
        if not self.is_root(beta):
            raise DomainError(f"{beta} is not a positive root of {self.series}{self.rank}")
        val = 2 * self.weight_dot_root(tuple(mu), beta) / self.root_norm2(beta)
        if val.denominator != 1:
            raise AssertionError(f"non-integral pairing {val} for weight {mu}, root {beta}")
        return int(val)

    def reflect(self, mu: Weight, i: int) -> Weight:
        """Simple reflection ``s_i(mu) = mu - <mu, alpha_i^vee> alpha_i``."""
        k = mu[i]
        return tuple(m - k * a for m, a in zip(mu, self.cartan[i]))

    def dominant_conjugate(self, mu: Weight) -> Weight:
        mu = tuple(mu)
        while True:
            neg = next((i for i, x in enumerate(mu) if x < 0), None)
            if neg is None:
                return mu
            mu = self.reflect(mu, neg)

    def to_root_coordinates(self, mu: Weight) -> tuple[Fraction, ...]:
        """Express a weight in the (rational) simple-root basis."""
        inv = self._cartan_inverse
        return tuple(sum((mu[j] * inv[j][i] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def dominates(self, lam: Weight, mu: Weight) -> bool:
        """True when ``lam - mu`` is a nonnegative integer combination of simple roots."""
        diff = tuple(a - b for a, b in zip(lam, mu))
        coords = self.to_root_coordinates(diff)
        return all(c.denominator == 1 and c >= 0 for c in coords)


def build_root_system(series: str, rank: int) -> RootSystem:
    """Cartan data and positive roots of the classical type ``series_rank``."""
    series = str(series).upper()
    if series not in _MIN_RANK:
        raise ConfigurationError(f"unsupported series {series!r}; only A, B, C, D are available")
    if not isinstance(rank, int) or rank < _MIN_RANK[series]:
        raise ConfigurationError(
            f"rank {rank!r} invalid for series {series} (minimum {_MIN_RANK[series]})")
    vecs = _simple_root_vectors(series, rank)
    gram = [[sum(a * b for a, b in zip(u, v)) for v in vecs] for u in vecs]
    cartan = tuple(tuple(2 * gram[i][j] // gram[j][j] for j in range(rank)) for i in range(rank))
    lengths = tuple(gram[i][i] for i in range(rank))

    # root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            pairing = [sum(beta[k] * cartan[k][i] for k in range(rank)) for i in range(rank)]
            for i in range(rank):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    positive = tuple(sorted(found, key=lambda b: (sum(b), tuple(-x for x in b))))
    if len(positive) != _expected_positive_count(series, rank):
        raise AssertionError(f"root enumeration for {series}{rank} produced {len(positive)} roots")
    return RootSystem(series, rank, cartan, positive, lengths)


# ---------------------------------------------------------------------------
# weight systems


@dataclass(frozen=True)
class WeightSystem:
    highest: Weight
    entries: dict  # Weight -> multiplicity, in deterministic depth-then-lex order

    @property
    def weights(self) -> list[Weight]:
        return list(self.entries)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, mu: Weight) -> int:
        return self.entries.get(tuple(mu), 0)

    def __contains__(self, mu) -> bool:
        return tuple(mu) in self.entries

    def expanded(self) -> list[Weight]:
        """Weights repeated according to multiplicity."""
        return [mu for mu, m in self.entries.items() for _ in range(m)]

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.entries)


def _check_dominant(rs: RootSystem, omega) -> Weight:
    omega = tuple(int(x) for x in omega)
    if len(omega) != rs.rank:
        raise DomainError(f"weight {omega} has length {len(omega)}, expected {rs.rank}")
    if any(x < 0 for x in omega):
        raise DomainError(f"weight {omega} is not dominant")
    return omega


def weight_system(rs: RootSystem, omega) -> WeightSystem:
    """All weights of V(omega) with multiplicities, by Freudenthal's recursion.

    Weights are discovered level by level below ``omega``; a candidate is kept
    iff its dominant conjugate is dominated by ``omega``, which guarantees the
    Freudenthal denominator is positive whenever it is evaluated.
    """
    omega = _check_dominant(rs, omega)
    rho = rs.rho
    top = tuple(a + b for a, b in zip(omega, rho))
    top_norm = rs.inner(top, top)
    pos_w = [(beta, rs.root_to_weight(beta)) for beta in rs.positive_roots]

    mult: dict[Weight, int] = {omega: 1}
    layer = [omega]
    while layer:
        candidates = set()
        for mu in layer:
            for i in range(rs.rank):
                nu = tuple(m - a for m, a in zip(mu, rs.cartan[i]))
                if nu not in mult:
                    candidates.add(nu)
        nxt = []
        for nu in sorted(candidates, reverse=True):
            if not rs.dominates(omega, rs.dominant_conjugate(nu)):
                continue
            shifted = tuple(a + b for a, b in zip(nu, rho))
            denom = top_norm - rs.inner(shifted, shifted)
            total = Fraction(0)
            for beta, bw in pos_w:
                k = 1
                while True:
                    up = tuple(n + k * b for n, b in zip(nu, bw))
                    m_up = mult.get(up)
                    if m_up is None:
                        # weights along a root string form an unbroken segment
                        break
                    total += m_up * rs.weight_dot_root(up, beta)
                    k += 1
            value = 2 * total / denom
            if value.denominator != 1 or value <= 0:
                raise AssertionError(f"Freudenthal produced {value} at {nu} for {omega}")
            mult[nu] = int(value)
            nxt.append(nu)
        layer = nxt
    return WeightSystem(omega, mult)


def weyl_dimension(rs: RootSystem, omega) -> int:
    """dim V(omega) from the Weyl dimension product."""
    omega = _check_dominant(rs, omega)
    shifted = tuple(a + 1 for a in omega)
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= Fraction(rs.weight_dot_root(shifted, beta), rs.weight_dot_root(rs.rho, beta))
    if num.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {num}")
    return int(num)


# ---------------------------------------------------------------------------
# parabolics


@dataclass(frozen=True)
class ParabolicData:
    levi_simples: frozenset  # 0-based simple-root indices in the Levi factor
    complement_roots: tuple[Root, ...]
    dim_x: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "dim_x", len(self.complement_roots))

    def is_maximal(self, rank: int) -> bool:
        return len(self.levi_simples) == rank - 1


def parabolic_from_weight(rs: RootSystem, omega) -> ParabolicData:
    """Parabolic ``P_omega`` stabilizing the highest weight line of V(omega)."""
    omega = _check_dominant(rs, omega)
    if not any(omega):
        raise DomainError("omega = 0 gives P = G; the flag variety is a point")
    levi = frozenset(j for j, x in enumerate(omega) if x == 0)
    outside = [j for j in range(rs.rank) if j not in levi]
    comp = tuple(b for b in rs.positive_roots if any(b[j] > 0 for j in outside))
    return ParabolicData(levi, comp)


def pair_with_coroot(rs: RootSystem, omega, beta) -> int:
    return rs.pair_with_coroot(tuple(omega), tuple(beta))
