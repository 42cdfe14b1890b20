"""Finitely presented modules over the orders of ``grouping``.

A presentation over an order R with a generators is a list of relation
vectors in R^a.  Each ring entry is given by its integer coordinates on the
Z-basis of R, so the whole module is Z^(a*n) modulo the Z-span of
``b_k * r`` for the basis elements b_k and relations r.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from ..grouping.orders import MinusIdeal, Order, maximal_order, ring_by_name
from ..linalg import hnf, lattice_index, quotient_invariants, rank


@dataclass(frozen=True)
class ActionModule:
    """Z^n / L with gamma acting by v -> v X (rows)."""

    relations: tuple
    action: tuple
    two_m: int

    @property
    def n(self) -> int:
        return len(self.action)

    def is_finite(self) -> bool:
        return self.n == 0 or (bool(self.relations) and rank(self.relations) == self.n)

    def order(self) -> int:
        if self.n == 0:
            return 1
        if not self.is_finite():
            raise ValueError("infinite module")
        return lattice_index(self.relations)

    def invariants(self) -> list:
        if self.n == 0:
            return []
        ident = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        return quotient_invariants(ident, list(self.relations) or [[0] * self.n])


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@dataclass(frozen=True)
class ModulePresentation:
    order: Order
    ngens: int
    relations: tuple  # each relation: tuple of ngens integer coordinate tuples

    @classmethod
    def build(cls, order: Order | str, ngens: int, relations) -> "ModulePresentation":
        if isinstance(order, str):
            order = ring_by_name(order)
        rels = []
        for r in relations:
            if len(r) != ngens:
                raise ValueError(f"relation {r} does not have {ngens} entries")
            entries = []
            for x in r:
                x = tuple(int(v) for v in x)
                if len(x) != order.deg:
                    raise ValueError(f"ring element {x} needs {order.deg} coordinates")
                entries.append(x)
            rels.append(tuple(entries))
        return cls(order, ngens, tuple(rels))

    @classmethod
    def cyclic(cls, ideal: MinusIdeal) -> "ModulePresentation":
        """R / A."""
        return cls.build(ideal.order, 1, [[r] for r in ideal.rows])

    @classmethod
    def zero(cls, order: Order) -> "ModulePresentation":
        return cls(order, 0, ())

    @property
    def rank(self) -> int:
        return self.ngens * self.order.deg

    def relation_elements(self) -> list:
        """Relations with entries as power-basis algebra elements."""
        return [[self.order.element(x) for x in r] for r in self.relations]

    def lattice(self) -> list:
        R = self.order
        rows = []
        for r in self.relation_elements():
            for b in R.basis_elements():
                row = []
                for x in r:
                    row.extend(R.int_coords(R.mul(b, x)))
                rows.append(row)
        return hnf(rows) if rows else []

    def gamma_matrix(self) -> list:
        G = self.order.gamma_matrix()
        n, a = self.order.deg, self.ngens
        out = [[0] * (n * a) for _ in range(n * a)]
        for blk in range(a):
            for i in range(n):
                for j in range(n):
                    out[blk * n + i][blk * n + j] = G[i][j]
        return out

    def action_module(self) -> ActionModule:
        return ActionModule(tuple(map(tuple, self.lattice())),
                            tuple(map(tuple, self.gamma_matrix())), self.order.two_m)

    def is_finite(self) -> bool:
        return self.ngens == 0 or rank(self.lattice()) == self.rank

    def order_bruteforce(self) -> int:
        from .bruteforce import count_quotient
        return count_quotient(self.lattice(), self.rank)

    def cardinality(self) -> int:
        return self.action_module().order()

    def direct_sum(self, other: "ModulePresentation") -> "ModulePresentation":
        if other.order != self.order:
            raise ValueError("direct sum over different rings")
        z = tuple(0 for _ in range(self.order.deg))
        rels = [tuple(r) + (z,) * other.ngens for r in self.relations]
        rels += [(z,) * self.ngens + tuple(r) for r in other.relations]
        return ModulePresentation(self.order, self.ngens + other.ngens, tuple(rels))

    def base_change(self, target: Order) -> "ModulePresentation":
        """M tensor_R T, same generators and relations read in T."""
        rels = [[target.int_coords(x) for x in r] for r in self.relation_elements()]
        return ModulePresentation.build(target, self.ngens, rels)


def _det(R: Order, M) -> tuple:
    """Determinant in the algebra by the Leibniz formula (zero divisors allowed)."""
    n = len(M)
    total = R.zero()
    for p in permutations(range(n)):
        term = R.one()
        for i in range(n):
            term = R.mul(term, M[i][p[i]])
        total = R.add(total, R.scale(_perm_sign(p), term))
    return total


def fitting_ideal(p: ModulePresentation) -> MinusIdeal:
    """Ideal of the ring generated by all a x a minors of the relation matrix."""
    R = p.order
    if p.ngens == 0:
        return MinusIdeal.unit(R)
    if not p.is_finite():
        raise ValueError("infinite module")
    rels = p.relation_elements()
    minors = []
    for cols in combinations(range(len(rels)), p.ngens):
        M = [[rels[c][i] for c in cols] for i in range(p.ngens)]
        minors.append(_det(R, M))
    return MinusIdeal.generated_by(R, minors)


def order_from_fitting(p: ModulePresentation) -> int:
    """(O : Fitt_O(M tensor O)) with O the maximal order of the presentation's ring.

    For a ring that is already maximal this is |M|; over Z[H] it is the order
    of M tensor O.
    """
    F = fitting_ideal(p)
    O = maximal_order(p.order)
    if O != p.order:
        F = F.extend(O)
    return F.index()
