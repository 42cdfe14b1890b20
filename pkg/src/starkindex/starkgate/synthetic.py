"""Random but internally consistent extension records.

The unit lattice is Z[G]^- theta_0 written in a scrambled basis, the logs of
theta_0 and its conjugates are random, and the L-values are computed from a
"true" solution (the construction times a random trivial unit), so every
identity the verifier tests holds by design.
"""
from __future__ import annotations

import random
from fractions import Fraction

import mpmath

from ..gmodule import ModulePresentation
from ..grouping import GroupSpec, minus_ring
from ..grouping.orders import o_components
from ..linalg import identity, inverse, matmul
from ..unitlattice import FieldSummary, LValueInput, MinusUnitLattice, chi_sum
from .construct import act_by, class_fitting_generator, kappa_power
from .record import ExtensionRecord, e_lower_bound, v2

MAX_CLASS_ORDER = 60


def negacyclic_companion(m: int) -> list:
    """gamma on the basis theta_0, gamma theta_0, ..., gamma^(m-1) theta_0."""
    A = [[0] * m for _ in range(m)]
    for l in range(m - 1):
        A[l][l + 1] = 1
    A[m - 1][0] = -1
    return A


def random_unimodular(m: int, rng: random.Random, steps: int = 6) -> list:
    P = identity(m)
    for _ in range(steps if m > 1 else 0):
        i, j = rng.sample(range(m), 2)
        q = rng.choice([-2, -1, 1, 2])
        P[i] = [a + q * b for a, b in zip(P[i], P[j])]
    if rng.random() < 0.5:
        P[0] = [-x for x in P[0]]
    return P


def random_class_module(m: int, rng: random.Random, max_order: int = MAX_CLASS_ORDER) -> ModulePresentation:
    R = minus_ring(m)
    while True:
        if rng.random() < 0.2:
            return ModulePresentation.zero(R)
        ngens = 1 if m == 1 or rng.random() < 0.7 else 2
        nrel = ngens + rng.randint(0, 1)
        rels = [[tuple(rng.randint(-3, 3) for _ in range(R.deg)) for _ in range(ngens)] for _ in range(nrel)]
        P = ModulePresentation.build(R, ngens, rels)
        if not P.is_finite():
            continue
        n = P.cardinality()
        if n > max_order or (m == 3 and n % 3 == 0):
            continue
        return P


def _lvalues_from(u: MinusUnitLattice, coords, two_m: int, precision: float) -> LValueInput:
    vals = {j: chi_sum(u, coords, j) for j in range(1, two_m, 2)}
    return LValueInput(two_m, vals, {j: precision for j in vals}, "synthetic")


def _regulators(lv: LValueInput, t_S: int, h_K: int, h_Kplus: int, rng: random.Random):
    """R_K from the class number formula prod L' = 2^t_S h_K R_K / (h_K+ R_K+)."""
    Rp = mpmath.mpf(rng.randint(100, 999)) / 100
    prod = abs(lv.product())
    return prod * h_Kplus * Rp / (2 ** t_S * h_K), Rp


def random_record(m: int, seed: int | None = None, d: int | None = None, precision: float = 1e-30) -> ExtensionRecord:
    rng = random.Random(seed)
    d = d if d is not None else rng.randint(2, 4)
    two_m = 2 * m
    R = minus_ring(m)
    A0 = negacyclic_companion(m)
    P = random_unimodular(m, rng)
    Pi = inverse(P)
    A = [[int(x) for x in row] for row in matmul(matmul(P, A0), Pi)]
    base = [mpmath.mpf(rng.uniform(-3, 3)) for _ in range(m)]
    full = base + [-x for x in base]
    logs = [[mpmath.fsum(P[l][i] * full[(j + i) % two_m] for i in range(m)) for l in range(m)] for j in range(m)]
    units = MinusUnitLattice(m, A, logs, precision)
    theta = [int(x) for x in Pi[0]]

    cl = random_class_module(m, rng)
    cl_order = cl.cardinality()
    c = v2(cl_order)
    t_S = rng.randint(0, 2)
    e_prime = c_prime = None
    if m == 3:
        e_prime = max(0, d - 3) + rng.randint(0, 1)
        e = e_prime + 2 * (d - 1 + rng.randint(0, 1))
    else:
        e = e_lower_bound(d, m) + rng.randint(0, 2)
        if m == 2 and e + t_S + c == 0:
            t_S = 1
    h_Kplus = rng.choice([1, 1, 2, 4, 5, 7] if m == 3 else [1, 1, 2, 3, 4, 5])
    h_K = cl_order * h_Kplus

    stub = ExtensionRecord(GroupSpec(two_m, d), FieldSummary(h_K, h_Kplus, 1, 1, t_S, e, c, e_prime, None, d, m),
                           units, cl, LValueInput(two_m, {}), name=f"synthetic-m{m}-{seed}")
    f = class_fitting_generator(stub)
    if m == 1:
        x = (Fraction(2 ** (e + t_S) * cl_order),)
    elif m == 2:
        x = R.mul(f, R.power(R.reduce([1, 1]), e + t_S))
    else:
        x = R.mul(kappa_power(e_prime + t_S, (e - e_prime) // 2), f)
    eta = act_by(R, A, x, theta)
    eta = units.act(eta, rng.randrange(two_m))
    key = 1 if m == 1 else 3 if m == 3 else None
    if key is not None and mpmath.re(chi_sum(units, eta, key)) < 0:
        eta = [-v for v in eta]
    lv = _lvalues_from(units, eta, two_m, precision)
    R_K, R_Kplus = _regulators(lv, t_S, h_K, h_Kplus, rng)

    sub = None
    if m == 3:
        f0 = abs(int(o_components(f)[0]))
        c_prime = v2(f0)
        sub = _sub_record(stub, units, eta, f0, d, t_S, e_prime, precision, rng)
    summary = FieldSummary(h_K, h_Kplus, R_K, R_Kplus, t_S, e, c, e_prime, c_prime, d, m)
    prov = {"oracle": "synthetic", "version": "1", "defining_polynomials": [], "seed": seed}
    return ExtensionRecord(GroupSpec(two_m, d), summary, units, cl, lv, sub, prov, stub.name)


def _sub_record(stub, units, eta, f0, d, t_S, e_prime, precision, rng) -> ExtensionRecord:
    from .checks import fixed_generator, norm_h_matrix
    v = fixed_generator(stub)
    lf = units.logs_of(v)[0]
    NH = norm_h_matrix(units.gamma_action)
    image = [sum(x * NH[i][j] for i, x in enumerate(eta)) for j in range(3)]
    k = next(Fraction(a, b) for a, b in zip(image, v) if b)
    F_units = MinusUnitLattice(1, [[-1]], [[lf]], precision)
    lv = _lvalues_from(F_units, [int(k)], 2, precision)
    cl = ModulePresentation.build("Z", 1, [[(f0,)]]) if f0 > 1 else ModulePresentation.zero(minus_ring(1))
    h_Kplus = 1
    R_K, R_Kplus = _regulators(lv, t_S, f0 * h_Kplus, h_Kplus, rng)
    summary = FieldSummary(f0 * h_Kplus, h_Kplus, R_K, R_Kplus, t_S, e_prime, v2(f0), None, None, d, 1)
    return ExtensionRecord(GroupSpec(2, d), summary, F_units, cl, lv, None, {"oracle": "synthetic"},
                           stub.name + "-F")
