"""Independent reference computations used only by the tests.

Nothing here calls into the package except to read a Cartan matrix.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np


def _reflect(cartan, mu, i):
    # s_i(mu) = mu - <mu, alpha_i^vee> alpha_i, alpha_i = row i of the Cartan matrix
    c = mu[i]
    return tuple(m - c * a for m, a in zip(mu, cartan[i]))


def weyl_group_action(cartan):
    """All w as (sign, function on weights), found by BFS on the orbit of rho."""
    n = len(cartan)
    rho = tuple([1] * n)
    words = {rho: ()}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                u = _reflect(cartan, v, i)
                if u not in words:
                    words[u] = words[v] + (i,)
                    nxt.append(u)
        frontier = nxt

    def make(word):
        def act(mu):
            for i in reversed(word):
                mu = _reflect(cartan, mu, i)
            return mu
        return act

    return [((-1) ** len(w), make(w)) for w in words.values()]


def roots_from_orbits(cartan):
    """Positive roots (simple-root coordinates) as W-orbits of the simple roots."""
    n = len(cartan)
    inv = np.linalg.inv(np.array(cartan, dtype=float))
    roots = set()
    for sign, act in weyl_group_action(cartan):
        for i in range(n):
            w = act(tuple(cartan[i]))
            coeffs = np.rint(np.array(w, dtype=float) @ inv).astype(int)
            if np.all(coeffs >= 0):
                roots.add(tuple(int(c) for c in coeffs))
    return sorted(roots)


def to_root_coords(cartan, nu):
    inv = np.linalg.inv(np.array(cartan, dtype=float))
    c = np.array(nu, dtype=float) @ inv
    r = np.rint(c)
    if np.max(np.abs(c - r)) > 1e-9:
        return None
    return tuple(int(x) for x in r)


def kostant_partition(roots):
    """Number of ways to write v as a sum of positive roots (with repetition)."""
    roots = tuple(roots)

    @lru_cache(maxsize=None)
    def count(v, k):
        if not any(v):
            return 1
        if k == len(roots) or any(x < 0 for x in v):
            return 0
        total = 0
        r = roots[k]
        w = v
        while all(x >= 0 for x in w):
            total += count(w, k + 1)
            w = tuple(a - b for a, b in zip(w, r))
        return total

    return lambda v: count(tuple(v), 0)


def kostant_multiplicities(cartan, omega, candidates):
    """Kostant's formula m(mu) = sum_w sgn(w) P(w(omega + rho) - (mu + rho))."""
    n = len(cartan)
    rho = (1,) * n
    roots = roots_from_orbits(cartan)
    part = kostant_partition(roots)
    group = weyl_group_action(cartan)
    lam_rho = tuple(o + 1 for o in omega)
    out = {}
    for mu in candidates:
        total = 0
        for sign, act in group:
            diff = tuple(a - b - 1 for a, b in zip(act(lam_rho), mu))
            c = to_root_coords(cartan, diff)
            if c is not None and all(x >= 0 for x in c):
                total += sign * part(c)
        if total:
            out[tuple(mu)] = total
    return out


def candidate_weights(cartan, omega):
    """Every omega - sum c_i alpha_i with small c; a superset of the weight system."""
    # every weight lies above the lowest one, so bound by max of omega - w(omega)
    inv = np.linalg.inv(np.array(cartan, dtype=float))
    omega = tuple(omega)
    gaps = [np.array([o - x for o, x in zip(omega, act(omega))], dtype=float) @ inv
            for _, act in weyl_group_action(cartan)]
    bounds = np.ceil(np.max(gaps, axis=0) - 1e-9).astype(int)
    seen = set()
    for c in product(*(range(b + 1) for b in bounds)):
        mu = tuple(o - sum(ci * cartan[i][j] for i, ci in enumerate(c)) for j, o in enumerate(omega))
        seen.add(mu)
    return seen


def dimension_type_a(omega):
    """Weyl's product formula for sl_{n+1}, coroots of A_n have pairing = coefficient sums."""
    n = len(omega)
    num = Fraction(1)
    for i in range(n):
        for j in range(i, n):
            lam = sum(omega[i: j + 1]) + (j - i + 1)
            num *= Fraction(lam, j - i + 1)
    return int(num)


def float_weakly_hyperbolic(values, n1):
    """Floating-point version of the argument-order predicate."""
    args = []
    for z in values:
        if z == 0:
            return False
        a = np.angle(z)
        if z.imag < 0 or (z.imag == 0 and z.real < 0):
            return False
        args.append(a)
    return max(args[:n1]) < min(args[n1:])


def plucker_relation(p):
    """p12 p34 - p13 p24 + p14 p23 for a vector in lex-ordered wedge^2 C^4."""
    p12, p13, p14, p23, p24, p34 = p
    return p12 * p34 - p13 * p24 + p14 * p23
