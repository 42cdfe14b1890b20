"""Tate cohomology of a finite cyclic group acting on a finitely generated abelian group.

A group is carried as Z^N / L with L given by generating rows; the generator
a of the cyclic group acts on row vectors by v -> v X.  Everything reduces to
preimages and quotients of integer lattices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .linalg import hnf, identity, in_lattice, kernel, matmul, matpow, quotient_invariants, transpose


@dataclass(frozen=True)
class CyclicAction:
    """A cyclic group of order n acting on Z^N / span(relations) via rows v -> v X."""

    n: int
    action: tuple
    relations: tuple = ()

    def __post_init__(self):
        X = [list(r) for r in self.action]
        N = len(X)
        object.__setattr__(self, "action", tuple(tuple(int(x) for x in r) for r in X))
        rel = hnf([[int(x) for x in r] for r in self.relations]) if self.relations else []
        object.__setattr__(self, "relations", tuple(map(tuple, rel)))
        if self.n < 1:
            raise ValueError("the acting group needs positive order")
        if any(len(r) != N for r in X):
            raise ValueError("action matrix must be square")
        L = [list(r) for r in self.relations]
        for r in L:
            if not _in_span(_rowmul(r, X), L):
                raise ValueError("action does not preserve the relation lattice")
        Xn = matpow(X, self.n) if N else []
        for i in range(N):
            d = [Xn[i][j] - int(i == j) for j in range(N)]
            if not _in_span(d, L):
                raise ValueError("action^n is not the identity")

    @classmethod
    def from_invariants(cls, n: int, free_rank: int, torsion, action) -> "CyclicAction":
        """Z^r + sum Z/d_i with generators in that order."""
        N = free_rank + len(torsion)
        rel = []
        for k, d in enumerate(torsion):
            row = [0] * N
            row[free_rank + k] = int(d)
            rel.append(row)
        return cls(n, tuple(map(tuple, action)), tuple(map(tuple, rel)))

    @property
    def rank(self) -> int:
        return len(self.action)

    def norm_matrix(self) -> list:
        N = self.rank
        out = [[0] * N for _ in range(N)]
        P = identity(N)
        for _ in range(self.n):
            out = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(out, P)]
            P = matmul(P, [list(r) for r in self.action])
        return out

    def invariants(self) -> list:
        return quotient_invariants(identity(self.rank), list(map(list, self.relations)))

    def is_finite(self) -> bool:
        return 0 not in self.invariants()

    def order(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite module")
        return prod(self.invariants())


def _rowmul(v, X):
    return [sum(v[i] * X[i][j] for i in range(len(v))) for j in range(len(X[0]))] if X else []


def _in_span(v, L) -> bool:
    if not any(v):
        return True
    return bool(L) and in_lattice(list(v), hnf(L))


def preimage(M, L) -> list:
    """HNF basis of {v in Z^N : v M in span(L)} for an N x K matrix M."""
    N = len(M)
    rows = [list(r) for r in M] + [[-x for x in r] for r in L]
    if not rows or not rows[0]:
        return identity(N)
    ker = kernel(transpose(rows), len(rows))
    return hnf([r[:N] for r in ker]) if ker else []


def _quotient(sup, sub, N) -> list:
    sub = [r for r in sub if any(r)]
    if not sup:
        return []
    return quotient_invariants(sup, sub or [[0] * N])


def tate_h0(c: CyclicAction) -> list:
    """Invariant factors of M^A / N_A M."""
    N = c.rank
    if N == 0:
        return []
    X = [list(r) for r in c.action]
    L = [list(r) for r in c.relations]
    XmI = [[X[i][j] - int(i == j) for j in range(N)] for i in range(N)]
    fixed = preimage(XmI, L)
    Nm = c.norm_matrix()
    return _quotient(fixed, Nm + L, N)


def tate_h1(c: CyclicAction) -> list:
    """Invariant factors of Ker(N_A) / (1 - a) M."""
    N = c.rank
    if N == 0:
        return []
    X = [list(r) for r in c.action]
    L = [list(r) for r in c.relations]
    ker = preimage(c.norm_matrix(), L)
    ImX = [[int(i == j) - X[i][j] for j in range(N)] for i in range(N)]
    return _quotient(ker, ImX + L, N)


def group_order(invariants) -> int:
    if 0 in invariants:
        raise ValueError("infinite cohomology")
    return prod(invariants)


def herbrand_quotient(c: CyclicAction) -> Fraction:
    return Fraction(group_order(tate_h0(c)), group_order(tate_h1(c)))


@dataclass
class HexagonReport:
    orders: dict  # "H0(M)", ... -> group order
    exact_input: bool
    alternating_product: Fraction
    neighbour_bounds: bool
    multiplicative: bool
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.exact_input and self.alternating_product == 1 and self.neighbour_bounds and self.multiplicative


def _same_lattice(a, b) -> bool:
    return hnf(a) == hnf(b)


def check_short_exact(M: CyclicAction, N: CyclicAction, P: CyclicAction, f, g) -> list:
    """Problems with 0 -> M -f-> N -g-> P -> 0 (maps as row matrices); [] if exact."""
    problems = []
    f = [list(r) for r in f]
    g = [list(r) for r in g]
    LM, LN, LP = ([list(r) for r in X.relations] for X in (M, N, P))
    if len(f) != M.rank or any(len(r) != N.rank for r in f):
        return ["f has the wrong shape"]
    if len(g) != N.rank or any(len(r) != P.rank for r in g):
        return ["g has the wrong shape"]
    for r in LM:
        if not _in_span(_rowmul(r, f), LN):
            problems.append("f is not well defined")
            break
    for r in LN:
        if not _in_span(_rowmul(r, g), LP):
            problems.append("g is not well defined")
            break
    XM, XN, XP = ([list(r) for r in X.action] for X in (M, N, P))
    for a, b in ((matmul(XM, f), matmul(f, XN)), (matmul(XN, g), matmul(g, XP))):
        for ra, rb in zip(a, b):
            if not _in_span([x - y for x, y in zip(ra, rb)], LN if len(ra) == N.rank else LP):
                problems.append("maps do not commute with the action")
                break
    # f injective: preimage of L_N under f is L_M
    if M.rank and not _same_lattice(preimage(f, LN) or [[0] * M.rank], LM or [[0] * M.rank]):
        problems.append("f is not injective")
    # g surjective
    if P.rank and not _same_lattice(g + LP, identity(P.rank)):
        problems.append("g is not surjective")
    # ker g = im f
    if N.rank:
        kg = preimage(g, LP) if P.rank else identity(N.rank)
        imf = (f if M.rank else []) + LN
        if not _same_lattice(kg or [[0] * N.rank], imf or [[0] * N.rank]):
            problems.append("kernel of g differs from the image of f")
    return problems


def check_hexagon(M: CyclicAction, N: CyclicAction, P: CyclicAction, f, g) -> HexagonReport:
    """Numerical consequences of the exact hexagon for a short exact sequence.

    Checks the alternating product of the six orders, that every group's order
    divides the product of its two neighbours, and Q(N) = Q(M) Q(P).
    """
    if not (M.n == N.n == P.n):
        raise ValueError("actions of different groups")
    problems = check_short_exact(M, N, P, f, g)
    ring = ["H0(M)", "H0(N)", "H0(P)", "H1(M)", "H1(N)", "H1(P)"]
    orders = {}
    for name, X in zip(ring, (M, N, P, M, N, P)):
        orders[name] = group_order(tate_h0(X) if name.startswith("H0") else tate_h1(X))
    alt = Fraction(1)
    for k, name in enumerate(ring):
        alt *= Fraction(orders[name]) if k % 2 == 0 else Fraction(1, orders[name])
    bounds = True
    for k, name in enumerate(ring):
        left, right = ring[(k - 1) % 6], ring[(k + 1) % 6]
        if (orders[left] * orders[right]) % orders[name]:
            bounds = False
    qm, qn, qp = (Fraction(orders[f"H0({x})"], orders[f"H1({x})"]) for x in "MNP")
    return HexagonReport(orders, not problems, alt, bounds, qn == qm * qp, problems)


def unit_herbrand_check(units: CyclicAction, complexified_places: int) -> tuple:
    """Compare Q(T, U_E) for an order-2 action on unit data with 2^(R-1)."""
    if units.n != 2:
        raise ValueError("unit data must carry an action of a group of order 2")
    q = herbrand_quotient(units)
    target = Fraction(2) ** (complexified_places - 1)
    return q, target, q == target


def h1_ramification_predicate(h1_trivial: bool, ramified_at_finite: bool, norm_kernel_has_order_two: bool) -> bool:
    """True when the data is consistent with the H^1 criterion for quadratic E/F."""
    if not h1_trivial:
        return True
    return (not ramified_at_finite) or norm_kernel_has_order_two
