"""Standard torus actions from exponent matrices and the d-standard extension.

A torus ``(C*)^n1`` acting on ``C^n`` through an integer exponent matrix ``A``
(``t e_j`` scales coordinate ``i`` by ``t**A[i][j]``) is d-standard when every
row sums to the same positive ``d`` and no entry is negative.

For a highest weight module V(omega) of rank-l ``G`` the maximal torus is
enlarged by one factor, and the weight-``mu`` line gets exponents
``d' + a_{mu,j}`` (``j <= l``) and ``d' - sum_i a_{mu,i}`` (``j = l+1``), with
``d' = 1 + sum |a_{mu,j}|`` over the distinct weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .linalg import rational_rank
from .rootdata import RootSystem, Weight, WeightSystem, weight_system


@dataclass(frozen=True)
class ExponentMatrix:
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "ExponentMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise DomainError("exponent matrix rows have unequal lengths")
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class StandardnessReport:
    row_sums_constant: bool
    d: int | None
    entries_nonneg: bool
    rank_full: bool
    is_d_standard: bool

    def as_dict(self) -> dict:
        return {
            "row_sums_constant": self.row_sums_constant,
            "d": self.d,
            "entries_nonneg": self.entries_nonneg,
            "rank_full": self.rank_full,
            "is_d_standard": self.is_d_standard,
        }


def check_exponent_matrix(a: ExponentMatrix) -> StandardnessReport:
    """Certify d-standardness via constant positive row sums and nonnegative entries."""
    if not isinstance(a, ExponentMatrix):
        a = ExponentMatrix.from_rows(a)
    n, n1 = a.shape
    if n == 0 or n1 == 0:
        raise DomainError("empty exponent matrix")
    sums = {sum(r) for r in a.entries}
    constant = len(sums) == 1
    d = sums.pop() if constant else None
    nonneg = all(x >= 0 for r in a.entries for x in r)
    rank_full = rational_rank(a.entries) == n1
    return StandardnessReport(
        row_sums_constant=constant,
        d=d,
        entries_nonneg=nonneg,
        rank_full=rank_full,
        is_d_standard=constant and d is not None and d > 0 and nonneg,
    )


@dataclass(frozen=True)
class StandardTorusData:
    rank: int
    d_prime: int
    exponent_table: dict  # Weight -> tuple of l+1 positive ints
    weights: WeightSystem

    @property
    def d(self) -> int:
        return self.d_prime * (self.rank + 1)

    @property
    def n(self) -> int:
        """Number of torus coordinates, l + 1."""
        return self.rank + 1

    def row(self, mu: Weight) -> tuple[int, ...]:
        try:
            return self.exponent_table[tuple(mu)]
        except KeyError:
            raise DomainError(f"{tuple(mu)} is not a weight of V{self.weights.highest}") from None


def exponent_row(a_mu: Weight, d_prime: int) -> tuple[int, ...]:
    return tuple(d_prime + x for x in a_mu) + (d_prime - sum(a_mu),)


def extend_to_standard(rs: RootSystem, omega, ws: WeightSystem | None = None) -> StandardTorusData:
    """Exponent table of the d-standard action of ``T x C*`` on V(omega) minus 0."""
    if ws is None:
        ws = weight_system(rs, omega)
    elif tuple(ws.highest) != tuple(omega):
        raise DomainError("weight system does not belong to omega")
    if not any(ws.highest):
        raise DomainError("omega must be nonzero")
    d_prime = 1 + sum(abs(x) for mu in ws.weights for x in mu)
    table = {mu: exponent_row(mu, d_prime) for mu in ws.weights}
    if any(x <= 0 for row in table.values() for x in row):
        raise AssertionError("nonpositive exponent in standard extension")
    return StandardTorusData(rs.rank, d_prime, table, ws)


def exponent_matrix_of(std: StandardTorusData) -> ExponentMatrix:
    """Rows d_{mu,j}, each weight repeated by its multiplicity."""
    return ExponentMatrix(tuple(std.exponent_table[mu] for mu in std.weights.expanded()))
