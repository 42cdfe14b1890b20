"""Element enumeration of finite quotients Z^n / L.

Deliberately avoids Smith and Hermite forms: classes modulo a full-rank
sublattice L0 are represented by the fractional parts of their coordinates
on L0, and the remaining relations are handled by a subgroup closure.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..linalg import inverse, rank

CAP = 10 ** 6


def _independent_rows(rows, n):
    chosen = []
    for r in rows:
        if rank(chosen + [r]) > len(chosen):
            chosen.append(list(r))
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise ValueError("infinite module")
    return chosen


class _Quotient:
    """Z^n / L0 for a full-rank L0 = span(B); a class is D * (coordinates on B) mod D."""

    def __init__(self, rows, n):
        self.n = n
        self.B = _independent_rows(rows, n)
        Binv = inverse(self.B)
        self.D = 1
        for row in Binv:
            for x in row:
                self.D = lcm(self.D, Fraction(x).denominator)
        self.BinvD = [[int(x * self.D) for x in row] for row in Binv]
        self.rest = [list(r) for r in rows]

    def canon(self, v):
        D, M = self.D, self.BinvD
        return tuple(sum(x * M[i][j] for i, x in enumerate(v) if x) % D for j in range(self.n))

    def vector(self, c):
        return [sum(ci * self.B[i][j] for i, ci in enumerate(c)) // self.D for j in range(self.n)]

    def add(self, a, b):
        D = self.D
        return tuple((x + y) % D for x, y in zip(a, b))


def enumerate_quotient(rows, n, cap: int = CAP) -> list:
    """Canonical representatives (as integer vectors) of Z^n / L."""
    if n == 0:
        return [[]]
    Q = _Quotient(rows, n)
    sub = _closure(Q, [Q.canon(r) for r in Q.rest], cap)
    units = [Q.canon([int(i == j) for j in range(n)]) for i in range(n)]
    full = _closure(Q, units, cap)
    # pick one element per coset of the relation subgroup
    seen = set()
    reps = []
    for x in full:
        if x in seen:
            continue
        reps.append(Q.vector(x))
        for s in sub:
            seen.add(Q.add(x, s))
    return reps


def _closure(Q, gens, cap):
    zero = Q.canon([0] * Q.n)
    elems = {zero}
    frontier = [zero]
    gens = [g for g in set(gens) if g != zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = Q.add(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > cap:
                        raise ValueError(f"quotient exceeds {cap} elements")
        frontier = nxt
    return elems


def count_quotient(rows, n, cap: int = CAP) -> int:
    if n == 0:
        return 1
    Q = _Quotient(rows, n)
    sub = _closure(Q, [Q.canon(r) for r in Q.rest], cap)
    units = [Q.canon([int(i == j) for j in range(n)]) for i in range(n)]
    full = _closure(Q, units, cap)
    assert len(full) % len(sub) == 0
    return len(full) // len(sub)


def class_of(Q: _Quotient, sub, v):
    """A canonical label of the class of v modulo the full relation lattice."""
    x = Q.canon(v)
    return min(Q.add(x, s) for s in sub)


def psi_order_bruteforce(rows, n, action, poly, p: int, k: int, cap: int = CAP) -> int:
    """|e M[p^k]| by enumeration, e = poly(gamma) given by integer coefficients."""
    if n == 0:
        return 1
    Q = _Quotient(rows, n)
    sub = _closure(Q, [Q.canon(r) for r in Q.rest], cap)
    units = [Q.canon([int(i == j) for j in range(n)]) for i in range(n)]
    full = _closure(Q, units, cap)
    pk = p ** k
    zero_label = class_of(Q, sub, [0] * n)
    images = set()
    for x in full:
        v = Q.vector(x)
        if class_of(Q, sub, [pk * a for a in v]) != zero_label:
            continue
        # apply sum_j poly[j] * gamma^j
        out = [0] * n
        w = v
        for c in poly:
            if c:
                out = [o + c * a for o, a in zip(out, w)]
            w = [sum(w[i] * action[i][j] for i in range(n)) for j in range(n)]
        images.add(class_of(Q, sub, out))
    return len(images)
