"""Exact linear algebra over Z and Q on plain nested lists.

Matrices are lists of rows of Python ints (or Fractions for ``rational_rank``).
Big integers are handled natively, so nothing here overflows or rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _axpy(dst: list[int], q: int, src: list[int]) -> None:
    for k, s in enumerate(src):
        if s:
            dst[k] -= q * s


def hermite_with_transform(a: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, int]:
    """Row-style Hermite normal form.

    Returns ``(H, U, r)`` with ``U`` unimodular, ``U @ a == H``, the first ``r``
    rows of ``H`` in echelon form with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``, and rows ``r:`` of ``H`` identically zero.
    """
    h = [[int(x) for x in row] for row in a]
    n = len(h)
    ncols = len(h[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if h[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            clean = True
            for i in range(r + 1, n):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    _axpy(h[i], q, h[r])
                    _axpy(u[i], q, u[r])
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                _axpy(h[i], q, h[r])
                _axpy(u[i], q, u[r])
        r += 1
    return h, u, r


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Nonzero rows of the row-HNF; a canonical basis of the row lattice."""
    if not rows:
        return []
    h, _, r = hermite_with_transform(rows)
    return h[:r]


def left_integer_kernel(a: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF basis of ``{m in Z^n : m @ a == 0}`` for an n x k integer matrix.

    The kernel is read off the unimodular transform, so the result is a basis of
    the full (saturated) lattice, not just a finite-index sublattice.
    """
    n = len(a)
    if n == 0:
        return []
    if not a[0]:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    _, u, r = hermite_with_transform(a)
    return hermite_normal_form(u[r:])


def lattice_contains(hnf_basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice spanned by an HNF basis."""
    w = [int(x) for x in v]
    for row in hnf_basis:
        c = next(k for k, x in enumerate(row) if x != 0)
        if w[c] % row[c]:
            return False
        q = w[c] // row[c]
        if q:
            _axpy(w, q, list(row))
    return not any(w)


def matvec_left(m: Sequence[int], a: Sequence[Sequence[int]]) -> list[int]:
    """Row vector times matrix, ``m @ a``, in exact integers."""
    if not a:
        return []
    out = [0] * len(a[0])
    for coeff, row in zip(m, a):
        if coeff:
            for k, x in enumerate(row):
                out[k] += coeff * x
    return out
