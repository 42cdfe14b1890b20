"""Minus-part unit lattices, log embeddings and the index/product formulae.

Conventions.  A unit of the minus part is an integer row vector c on a basis
eps_1..eps_m (additive notation).  gamma acts by c -> c A, so row l of A holds
the coordinates of gamma . eps_l, and A^m = -I because tau acts as -1.  The
log matrix Lam has Lam[j][l] = log|gamma^j eps_l| at the distinguished real
place w, for 0 <= j < m; the row for gamma^(j+m) is the negative of row j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .grouping import Character, CyclotomicValue, GroupSpec, odd_classes
from .linalg import det, identity, int_det, kernel, lattice_index as _lattice_index, matmul, matpow, rank, saturation, transpose
from .numerics import DEFAULT_TOLERANCE, FAIL, INCONCLUSIVE, PASS, compare, to_mpf, worst


class DataInconsistency(ValueError):
    """Input data contradicts a structural property the formulae rely on."""


# determinant group factorization

def detgroup_factorize(a, two_m: int | None = None) -> tuple:
    """Both sides of the determinant factorization for a tau-antisymmetric a: G -> Q.

    ``a`` lists a_(gamma^k) for k < 2m.  lhs = det(a_(rho lambda^-1)) over
    R = {1, gamma, ..., gamma^(m-1)}; rhs = prod over odd chi of
    sum_rho chi(rho) a_rho, evaluated as a product of exact field norms.
    """
    a = [Fraction(x) for x in a]
    n = two_m or len(a)
    if len(a) != n or n % 2:
        raise ValueError("need 2m values")
    m = n // 2
    for k in range(n):
        if a[(k + m) % n] != -a[k]:
            raise ValueError(f"antisymmetry violated at gamma^{k}")
    lhs = det([[a[(r - l) % n] for l in range(m)] for r in range(m)])
    g = GroupSpec(n)
    rhs = Fraction(1)
    for order in odd_classes(g):
        chi = Character(n, min(odd_classes(g)[order]))
        s = CyclotomicValue.rational(chi.order, 0)
        for r in range(m):
            if a[r]:
                s = s + chi.value(r) * a[r]
        rhs *= s.norm()
    return lhs, rhs


# lattices

def lattice_index(sub, sup=None) -> int:
    """(sup : sub) for full-rank integer lattices given by generating rows."""
    sub = [list(r) for r in sub]
    if not sub or rank(sub) < len(sub[0]):
        raise ValueError("rank-deficient sublattice")
    return _lattice_index(sub, sup)


def minus_kernel(tau, expected_rank: int | None = None) -> list:
    """Saturated basis (rows) of {v : v (1 + tau) = 0} for tau acting on rows."""
    T = [[int(x) for x in r] for r in tau]
    n = len(T)
    if matmul(T, T) != identity(n):
        raise DataInconsistency("tau is not an involution")
    S = [[T[i][j] + int(i == j) for j in range(n)] for i in range(n)]
    K = kernel(transpose(S), n)
    if not K:
        raise DataInconsistency("tau has no -1 eigenspace")
    K = saturation(K)
    if expected_rank is not None and len(K) != expected_rank:
        raise DataInconsistency(f"minus kernel has rank {len(K)}, expected {expected_rank}")
    return K


def orbit_rows(c, A, m: int) -> list:
    """c, cA, ..., cA^(m-1): a Z-basis of Z[G] c inside the minus lattice."""
    rows = [list(c)]
    for _ in range(m - 1):
        rows.append([sum(rows[-1][i] * A[i][j] for i in range(m)) for j in range(m)])
    return rows


def orbit_index(c, A, m: int) -> int:
    """(U^- : Z[G] c); raises if the orbit has rank < m."""
    d = int_det(orbit_rows(c, A, m))
    if d == 0:
        raise ValueError("candidate orbit is rank deficient: not a Q[G]^- generator")
    return abs(d)


# data types

@dataclass
class MinusUnitLattice:
    m: int
    gamma_action: list
    log_embeddings: list
    precision: float = 1e-10
    labels: list = field(default_factory=list)

    def __post_init__(self):
        A = [[int(x) for x in r] for r in self.gamma_action]
        if len(A) != self.m or any(len(r) != self.m for r in A):
            raise DataInconsistency("gamma_action must be m x m")
        if matpow(A, self.m) != [[-int(i == j) for j in range(self.m)] for i in range(self.m)]:
            raise DataInconsistency("gamma_action^m is not -identity")
        self.gamma_action = A
        L = [[to_mpf(x) for x in r] for r in self.log_embeddings]
        if len(L) != self.m or any(len(r) != self.m for r in L):
            raise DataInconsistency("log_embeddings must be m x m")
        self.log_embeddings = L
        if not self.labels:
            self.labels = [f"eps_{l + 1}" for l in range(self.m)]

    def logs_of(self, c) -> list:
        """log|gamma^k u| at w for k < m, u with coordinates c."""
        return [mpmath.fsum(to_mpf(x) * v for x, v in zip(c, row)) for row in self.log_embeddings]

    def log_radius(self, c) -> float:
        return self.precision * sum(abs(int(x)) for x in c)

    def act(self, c, k: int = 1) -> list:
        """Coordinates of gamma^k u."""
        out = list(c)
        for _ in range(k % (2 * self.m)):
            out = [sum(out[i] * self.gamma_action[i][j] for i in range(self.m)) for j in range(self.m)]
        return out

    def consistency(self, tolerance: float = DEFAULT_TOLERANCE) -> str:
        """Logs must satisfy log|gamma^j (gamma eps)| = log|gamma^(j+1) eps| (negacyclic)."""
        statuses = []
        for l in range(self.m):
            e = [int(i == l) for i in range(self.m)]
            lg = self.logs_of(e)
            shifted = lg[1:] + [-lg[0]]
            moved = self.logs_of(self.act(e))
            r = self.log_radius(self.act(e)) + self.precision
            statuses += [compare(a, b, r, tolerance).status for a, b in zip(moved, shifted)]
        return worst(statuses)

    def regulator(self):
        """|det(log|gamma^j eps_l|)|."""
        return abs(mpmath.det(mpmath.matrix(self.log_embeddings)))


@dataclass
class LValueInput:
    """L'(0, chi_j) for odd exponents j, keyed by j."""

    two_m: int
    values: dict
    precision: dict = field(default_factory=dict)
    provenance: str = ""

    def __post_init__(self):
        vals = {}
        for j, v in self.values.items():
            j = int(j) % self.two_m
            if j % 2 == 0:
                raise ValueError(f"chi^{j} is even; only odd L-values are supplied")
            vals[j] = v if isinstance(v, mpmath.mpc) else mpmath.mpc(v)
        self.values = vals
        self.precision = {int(j) % self.two_m: float(p) for j, p in self.precision.items()}
        for j in list(vals):
            self.precision.setdefault(j, 1e-10)
            c = (-j) % self.two_m
            if c not in vals:
                vals[c] = mpmath.conj(vals[j])
                self.precision[c] = self.precision[j]

    def missing(self) -> list:
        return [j for j in range(1, self.two_m, 2) if j not in self.values]

    def conjugate_consistency(self, tolerance: float = DEFAULT_TOLERANCE) -> str:
        st = []
        for j, v in self.values.items():
            w = self.values[(-j) % self.two_m]
            st.append(compare(v, mpmath.conj(w), self.precision[j] * 2, tolerance).status)
        return worst(st)

    def product(self):
        out = mpmath.mpc(1)
        for j in range(1, self.two_m, 2):
            out *= self.values[j]
        return out

    def product_radius(self):
        p = self.product()
        return sum(abs(p / self.values[j]) * self.precision[j] for j in range(1, self.two_m, 2)
                   if self.values[j] != 0)


@dataclass
class FieldSummary:
    h_K: int
    h_Kplus: int
    R_K: object
    R_Kplus: object
    t_S: int
    e: int
    c: int | None = None
    e_prime: int | None = None
    c_prime: int | None = None
    d: int = 1
    m: int = 1

    @property
    def cl_minus_order(self) -> int:
        if self.h_K % self.h_Kplus:
            raise DataInconsistency("h_Kplus does not divide h_K")
        return self.h_K // self.h_Kplus


# product formula

def chi_sum(u: MinusUnitLattice, c, j: int, half: bool = True):
    """(1/2) sum_{g in G} chi_j(g) log|eta^g| (or the full sum) for eta with coordinates c."""
    m = u.m
    logs = u.logs_of(c)
    full = [*logs, *[-x for x in logs]]
    s = mpmath.fsum(mpmath.expjpi(mpmath.mpf(2 * j * k) / (2 * m)) * full[k] for k in range(2 * m))
    return s / 2 if half else s


def chi_sum_radius(u: MinusUnitLattice, c) -> float:
    return u.m * u.log_radius(c)


@dataclass
class ProdformResult:
    lhs: object
    rhs: object
    ratio: object
    status: str
    degenerate: bool = False
    note: str = ""


def prodform_check(u: MinusUnitLattice, c, l: LValueInput, tolerance: float = DEFAULT_TOLERANCE) -> ProdformResult:
    """Compare prod_chi (1/2) sum_g chi(g) log|eta^g| with prod_chi L'(0, chi)."""
    if l.missing():
        raise ValueError(f"missing L-values for chi^{l.missing()}")
    sums = [chi_sum(u, c, j) for j in range(1, 2 * u.m, 2)]
    lhs = mpmath.mpc(1)
    for s in sums:
        lhs *= s
    rhs = l.product()
    if not any(int(x) for x in c):
        return ProdformResult(lhs, rhs, None, INCONCLUSIVE, True, "zero candidate")
    if abs(rhs) <= l.product_radius():
        return ProdformResult(lhs, rhs, None, INCONCLUSIVE, True, "L-value product vanishes")
    r = chi_sum_radius(u, c)
    lhs_rad = sum(abs(lhs / s) * r for s in sums if s != 0) if all(s != 0 for s in sums) else r
    ratio = lhs / rhs
    rel = lhs_rad / max(abs(lhs), mpmath.mpf("1e-300")) + l.product_radius() / abs(rhs)
    cmp = compare(abs(ratio), mpmath.mpf(1), abs(ratio) * rel, tolerance, relative=False)
    return ProdformResult(lhs, rhs, ratio, cmp.status)


def abs_lvalue_check(u: MinusUnitLattice, c, l: LValueInput, j: int, signed: bool = False,
                     tolerance: float = DEFAULT_TOLERANCE):
    """|(1/2) sum_g chi_j(g) log|eta^g|| against |L'(0, chi_j)|; even chi: both sides vanish."""
    j %= 2 * u.m
    r = chi_sum_radius(u, c)
    if j % 2 == 0:
        s = chi_sum(u, c, j)
        return compare(abs(s), mpmath.mpf(0), 2 * r, tolerance)
    s = chi_sum(u, c, j)
    L = l.values[j]
    if signed:
        return compare(s, L, r + l.precision[j], tolerance)
    return compare(abs(s), abs(L), r + l.precision[j], tolerance)


# regulator decomposition

@dataclass
class RegulatorReport:
    regulator: object
    minus_det: object
    plus_det: object
    status_factorization: str
    status_plus: str
    status_shape: str

    @property
    def status(self) -> str:
        return worst([self.status_factorization, self.status_plus, self.status_shape])


def regulator_decomposition_check(logs, m: int, d: int, kplus_regulator, precision: float = 1e-10,
                                  tolerance: float = DEFAULT_TOLERANCE) -> RegulatorReport:
    """Check Reg(U_Stark) = |det(log|eps_l|_j)| * 2^(dm-1) R_K+ on the assembled log matrix.

    ``logs`` has (d+1)m-1 rows ordered |.|_j = |rho_j .|, then |rho_j tau .|,
    then the complex places (normalized, i.e. twice the usual log), and
    columns: dm-1 fundamental units of K+ followed by eps_1..eps_m.
    """
    n = (d + 1) * m - 1
    M = [[to_mpf(x) for x in r] for r in logs]
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError(f"log matrix must be {n} x {n}")
    k = d * m - 1
    Rp = to_mpf(kplus_regulator)
    # shape: tau rows negate the eps block and repeat the eta block; eps vanishes at complex places
    shape = []
    for j in range(m):
        for i in range(k):
            shape.append(compare(M[m + j][i], M[j][i], 2 * precision, tolerance).status)
        for l in range(m):
            shape.append(compare(M[m + j][k + l], -M[j][k + l], 2 * precision, tolerance).status)
    for j in range(2 * m, n):
        for l in range(m):
            shape.append(compare(M[j][k + l], mpmath.mpf(0), precision, tolerance).status)
    full = mpmath.matrix(M)
    reg = abs(mpmath.det(full)) if n else mpmath.mpf(1)
    eps = mpmath.matrix([[M[j][k + l] for l in range(m)] for j in range(m)])
    minus_det = abs(mpmath.det(eps))
    plus_rows = [[2 * M[j][i] for i in range(k)] for j in range(m)] + [M[j][:k] for j in range(2 * m, n)]
    plus_det = abs(mpmath.det(mpmath.matrix(plus_rows))) if k else mpmath.mpf(1)
    rad = _det_radius(full, precision) if n else 0
    fact = compare(reg, minus_det * plus_det, rad + _det_radius(eps, precision) * plus_det
                   + minus_det * (_det_radius(mpmath.matrix(plus_rows), 2 * precision) if k else 0), tolerance)
    target = mpmath.mpf(2) ** k * Rp
    plus = compare(plus_det, target, (_det_radius(mpmath.matrix(plus_rows), 2 * precision) if k else 0)
                   + target * precision, tolerance)
    return RegulatorReport(reg, minus_det, plus_det, fact.status, plus.status, worst(shape) if shape else PASS)


def _det_radius(M, delta) -> float:
    """First-order bound on |det| change when each entry moves by delta."""
    n = M.rows
    if n == 0:
        return 0
    total = mpmath.mpf(0)
    for i in range(n):
        for j in range(n):
            minor = mpmath.matrix([[M[a, b] for b in range(n) if b != j] for a in range(n) if a != i]) if n > 1 else None
            total += abs(mpmath.det(minor)) if minor is not None else 1
    return float(total * delta * 1.01)
