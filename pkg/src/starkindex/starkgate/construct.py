"""Explicit solutions of the index formulae for m = 1, 2, 3.

The minus ring R acts on the unit lattice through gamma -> A: for m = 1, 2
the power basis of R is 1, gamma, ..., and for m = 3 it is 1, sigma, sigma^2
with sigma = gamma^2.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath

from ..gmodule import fitting_ideal
from ..grouping import MinusIdeal, principal_generator
from ..grouping.orders import find_generator_power
from ..grouping.orders import o_from_components, o_units, ring_O, ring_ZH
from ..linalg import common_denominator, det, hnf, identity, inverse, matmul, matpow
from ..unitlattice import DataInconsistency, chi_sum, orbit_index
from .record import CandidateUnit, ExtensionRecord


def generator_power(order) -> int:
    return 2 if order.lift == "H" else 1


def ring_action(order, A) -> list:
    """Matrices of the power-basis elements t^k of the order acting on rows."""
    T = matpow(A, generator_power(order))
    out = [identity(len(A))]
    for _ in range(order.deg - 1):
        out.append(matmul(out[-1], T))
    return out


def act_by(order, A, x, c) -> list:
    """Coordinates of x . c for x in power coordinates (rational allowed)."""
    mats = ring_action(order, A)
    n = len(A)
    out = [Fraction(0)] * n
    for xk, M in zip(x, mats):
        if xk:
            for j in range(n):
                out[j] += Fraction(xk) * sum(c[i] * M[i][j] for i in range(n))
    if any(v.denominator != 1 for v in out):
        raise DataInconsistency("ring element does not map the lattice into itself")
    return [int(v) for v in out]


def _orbit_matrix(order, A, c) -> list:
    return [[sum(c[i] * M[i][j] for i in range(len(A))) for j in range(len(A))] for M in ring_action(order, A)]


def _trial_vectors(m):
    for l in range(m):
        yield [int(i == l) for i in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            yield [int(i in (a, b)) for i in range(m)]
    yield [1] * m
    for k in range(2, 6):
        yield [k ** i for i in range(m)]


def lattice_ideal(r: ExtensionRecord):
    """(theta', D, I): theta' a Q[G]^- generator and I = D * {x : x theta' in U}."""
    R = r.ring
    A = r.units.gamma_action
    for v in _trial_vectors(r.m):
        T = _orbit_matrix(R, A, v)
        if det(T) != 0:
            break
    else:
        raise DataInconsistency("no Q[G]^- generator among trial vectors")
    Tinv = inverse(T)
    D = common_denominator(Tinv)
    rows = [[int(x * D) for x in row] for row in Tinv]
    I = MinusIdeal.generated_by(R, [R.element(row) for row in rows])
    if I != MinusIdeal(R, tuple(tuple(x) for x in hnf(rows))):
        raise DataInconsistency("unit lattice is not stable under the group ring")
    return v, D, I


def minus_generator(r: ExtensionRecord) -> list:
    """Coordinates of theta with U^- = Z[G]^- theta; DataInconsistency if U^- is not free."""
    R = r.ring
    v, D, I = lattice_ideal(r)
    if r.m == 1:
        g = 0
        for x in I.elements():
            g = gcd(g, int(x[0]))
        g = (Fraction(g),)
    elif r.m == 2:
        g = principal_generator(I)
    elif r.m == 3:
        g, principal = find_generator_power(I)
        if not principal:
            raise DataInconsistency("the lattice ideal Lambda is not principal: U^- is not free over Z[H]")
    else:
        raise NotImplementedError("constructions exist for m <= 3 only")
    theta = act_by(R, r.units.gamma_action, [x / D for x in g], v)
    if orbit_index(theta, r.units.gamma_action, r.m) != 1:
        raise DataInconsistency("U^- is not free over Z[G]^-")
    return theta


def class_fitting_generator(r: ExtensionRecord) -> tuple:
    """Generator f (power coordinates of the minus ring) of Fitt(Cl^-)."""
    P = r.class_minus
    R = r.ring
    F = fitting_ideal(P)
    if r.m == 1:
        g = 0
        for x in F.elements():
            g = gcd(g, int(x[0]))
        return (Fraction(g),)
    if r.m == 2:
        return principal_generator(F)
    if P.order.name == "Z[H]":
        g, principal = find_generator_power(F)
        if not principal:
            raise DataInconsistency("Fitting ideal of Cl^- is not principal; 3 divides |Cl^-|")
        return g
    if P.order.name == "O":
        # 3 does not divide |Cl^-|, so Fitt_Z[H] = Fitt_O meet Z[H] = g Z[H]
        gp = principal_generator(F)
        for u in o_units():
            g = ring_O().mul(gp, u)
            if ring_ZH().contains(g):
                return g
        raise DataInconsistency("no Z[H] generator of the Fitting ideal")
    raise DataInconsistency(f"class group ring {P.order.name} does not match m = 3")


def _lexmin(cands):
    return min(cands, key=lambda c: (sum(abs(x) for x in c), c))


def _orient(r: ExtensionRecord, coords, j: int) -> list:
    """Flip the sign so the chi_j half-sum has the sign of Re L'(0, chi_j)."""
    s = chi_sum(r.units, coords, j)
    L = r.lvalues.values.get(j % (2 * r.m))
    if L is None or mpmath.re(L) == 0 or mpmath.re(s) == 0:
        return coords
    if (mpmath.re(s) > 0) != (mpmath.re(L) > 0):
        return [-x for x in coords]
    return coords


def construct_quadratic(r: ExtensionRecord) -> CandidateUnit:
    if r.m != 1:
        raise ValueError("construct_quadratic needs m = 1")
    theta = minus_generator(r)
    s = r.summary
    k = 2 ** (s.e + s.t_S) * r.cl_order
    coords = _orient(r, [k * theta[0]], 1)
    return CandidateUnit(coords, 1 if coords[0] * theta[0] > 0 else -1)


def construct_quartic(r: ExtensionRecord) -> CandidateUnit:
    if r.m != 2:
        raise ValueError("construct_quartic needs m = 2")
    R = r.ring
    A = r.units.gamma_action
    theta = minus_generator(r)
    f = class_fitting_generator(r)
    s = r.summary
    x = R.mul(f, R.power(R.reduce([1, 1]), s.e + s.t_S))
    eta = act_by(R, A, x, theta)
    # unique up to +-gamma^j: take a canonical representative
    cands = []
    c = eta
    for _ in range(4):
        cands.append(c)
        c = r.units.act(c)
    return CandidateUnit(_lexmin(cands))


def kappa_power(n: int, mm: int) -> tuple:
    """kappa_{n, mm} in sigma power coordinates."""
    return o_from_components(2 ** n, ((-1) ** (n + mm) * 2 ** mm, 0))


def sextic_parts(r: ExtensionRecord) -> dict:
    """kappa, f and theta for the sextic construction."""
    if r.m != 3:
        raise ValueError("sextic construction needs m = 3")
    s = r.summary
    if s.e_prime is None:
        raise DataInconsistency("sextic records need e_prime")
    if r.summary.h_K % 3 == 0:
        raise DataInconsistency("3 divides |Cl_K|: the sextic construction is not supported")
    diff = s.e - s.e_prime
    if diff < 0 or diff % 2:
        raise DataInconsistency("e - e_prime must be nonnegative and even")
    kap = kappa_power(s.e_prime + s.t_S, diff // 2)
    return {"kappa": kap, "f": class_fitting_generator(r), "theta": minus_generator(r)}


def construct_sextic(r: ExtensionRecord) -> CandidateUnit:
    R = r.ring
    A = r.units.gamma_action
    parts = sextic_parts(r)
    x = R.mul(parts["kappa"], parts["f"])
    eta = act_by(R, A, x, parts["theta"])
    eta = _orient(r, eta, 3)
    # sigma leaves the chi^3 sum fixed; normalise over the H-orbit
    cands = [eta, r.units.act(eta, 2), r.units.act(eta, 4)]
    return CandidateUnit(_lexmin(cands))


def construct(r: ExtensionRecord) -> CandidateUnit:
    builders = {1: construct_quadratic, 2: construct_quartic, 3: construct_sextic}
    if r.m not in builders:
        raise NotImplementedError(f"no construction for m = {r.m}")
    return builders[r.m](r)
