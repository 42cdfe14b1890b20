"""Orders in the minus part of Q[G] and their ideals.

Every ring here is a Z-order in an algebra Q[t]/(P) for a monic integer
polynomial P.  Elements are carried as tuples of rationals in the power basis
1, t, ..., t^(deg P - 1).  An order is described by a Z-basis in those
coordinates together with the image of gamma, which is how group ring
elements enter and how the Galois action on modules is read off.

The rings:

* ``Z``       minus part for m = 1, t + 1, gamma -> -1
* ``Z[i]``    minus part for m = 2, t^2 + 1, gamma -> i
* ``Z[H]``    minus part for m = 3 written in sigma = gamma^2, t^3 - 1, gamma -> -sigma^2
* ``O``       maximal order e_0 Z[H] + e_1 Z[H] of the same algebra
* ``Z[w]``    Eisenstein integers, seen as the e_1-part of ``O`` (gamma -> 1 + w)
* ``Z[G]^-(m)``  Z[t]/(t^m + 1) for other m
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import floor, gcd

from ..linalg import det, hnf, in_lattice, inverse, lattice_index, transpose
from .cyclotomic import poly_mod, poly_mul
from .grouprings import GroupRingElement, GroupSpec, minus_idempotent


def _frac_tuple(x) -> tuple:
    return tuple(Fraction(v) for v in x)


@dataclass(frozen=True)
class Order:
    name: str
    modulus: tuple
    basis: tuple
    gamma: tuple
    two_m: int
    lift: str  # how power-basis elements map into Q[G]: "minus", "H" or "omega"

    @property
    def deg(self) -> int:
        return len(self.modulus) - 1

    @property
    def group(self) -> GroupSpec:
        return GroupSpec(self.two_m)

    # algebra arithmetic (power coordinates)
    def reduce(self, x) -> tuple:
        return _frac_tuple(poly_mod(list(x), self.modulus))

    def mul(self, x, y) -> tuple:
        return self.reduce(poly_mul(list(x), list(y)))

    def add(self, x, y) -> tuple:
        return tuple(Fraction(a) + Fraction(b) for a, b in zip(x, y))

    def sub(self, x, y) -> tuple:
        return tuple(Fraction(a) - Fraction(b) for a, b in zip(x, y))

    def scale(self, q, x) -> tuple:
        q = Fraction(q)
        return tuple(q * Fraction(a) for a in x)

    def one(self) -> tuple:
        return self.reduce([1])

    def zero(self) -> tuple:
        return (Fraction(0),) * self.deg

    def power(self, x, k: int) -> tuple:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def power_matrix(self, x) -> list:
        """Matrix of multiplication by x on the power basis (row convention)."""
        return [list(self.mul([0] * k + [1], x)) for k in range(self.deg)]

    def algebra_norm(self, x) -> Fraction:
        return det(self.power_matrix(x))

    def inverse(self, x) -> tuple:
        inv = inverse(self.power_matrix(x))
        return tuple(inv[0])  # row of 1 * x^{-1}

    # Z-basis coordinates
    @cached_property
    def _basis_inverse(self):
        return inverse([list(b) for b in self.basis])

    def coords(self, x) -> list:
        """Rational coordinates of x on the Z-basis."""
        xs = [Fraction(v) for v in x]
        return [sum(a * b for a, b in zip(xs, col)) for col in transpose(self._basis_inverse)]

    def int_coords(self, x) -> list:
        c = self.coords(x)
        if any(v.denominator != 1 for v in c):
            raise ValueError(f"element not in {self.name}")
        return [int(v) for v in c]

    def contains(self, x) -> bool:
        return all(v.denominator == 1 for v in self.coords(x))

    def element(self, c) -> tuple:
        out = [Fraction(0)] * self.deg
        for ck, b in zip(c, self.basis):
            if ck:
                for i, v in enumerate(b):
                    out[i] += ck * v
        return tuple(out)

    def basis_elements(self) -> list:
        return [tuple(b) for b in self.basis]

    def mult_matrix(self, y) -> list:
        """Row k = coordinates of b_k * y, so coords(x*y) = coords(x) @ M."""
        return [self.int_coords(self.mul(b, y)) for b in self.basis]

    def gamma_matrix(self) -> list:
        return self.mult_matrix(self.gamma)

    # passage to and from Q[G]
    def to_group(self, x) -> GroupRingElement:
        g = self.group
        x = list(x)
        if self.lift == "minus":
            elt = GroupRingElement.from_powers(g, {k: c for k, c in enumerate(x)})
            return minus_idempotent(g) * elt
        if self.lift == "H":
            return GroupRingElement.from_powers(g, {2 * k: c for k, c in enumerate(x)})
        if self.lift == "omega":
            b, c = x
            e1 = GroupRingElement.from_powers(g, {0: Fraction(2, 3), 2: Fraction(-1, 3), 4: Fraction(-1, 3)})
            return e1 * GroupRingElement.from_powers(g, {0: b, 2: c})
        raise ValueError(self.lift)

    def from_group(self, x: GroupRingElement) -> tuple:
        """Image under the algebra map gamma -> self.gamma (which kills 1 + tau)."""
        if x.group.two_m != self.two_m:
            raise ValueError("group order mismatch")
        out = self.zero()
        p = self.one()
        for c in x.coeffs:
            if c:
                out = self.add(out, self.scale(c, p))
            p = self.mul(p, self.gamma)
        return out

    def as_power(self, x) -> tuple:
        if isinstance(x, GroupRingElement):
            return self.from_group(x)
        return self.reduce(list(x))

    def __repr__(self):
        return f"Order({self.name})"


@lru_cache(maxsize=None)
def ring_Z() -> Order:
    return Order("Z", (1, 1), ((Fraction(1),),), (Fraction(-1),), 2, "minus")


@lru_cache(maxsize=None)
def ring_ZI() -> Order:
    return Order("Z[i]", (1, 0, 1), _identity_basis(2), (Fraction(0), Fraction(1)), 4, "minus")


@lru_cache(maxsize=None)
def ring_ZH() -> Order:
    return Order("Z[H]", (-1, 0, 0, 1), _identity_basis(3),
                 (Fraction(0), Fraction(0), Fraction(-1)), 6, "H")


E0 = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
E1 = (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))


@lru_cache(maxsize=None)
def ring_O() -> Order:
    e1s = (Fraction(-1, 3), Fraction(2, 3), Fraction(-1, 3))
    return Order("O", (-1, 0, 0, 1), (E0, E1, e1s),
                 (Fraction(0), Fraction(0), Fraction(-1)), 6, "H")


@lru_cache(maxsize=None)
def ring_ZW() -> Order:
    return Order("Z[w]", (1, 1, 1), _identity_basis(2), (Fraction(1), Fraction(1)), 6, "omega")


@lru_cache(maxsize=None)
def minus_ring(m: int) -> Order:
    """Z[G]^- = Z[t]/(t^m + 1) for the cyclic group of order 2m."""
    if m == 1:
        return ring_Z()
    if m == 2:
        return ring_ZI()
    if m == 3:
        return ring_ZH()
    modulus = (1,) + (0,) * (m - 1) + (1,)
    gamma = (Fraction(0), Fraction(1)) + (Fraction(0),) * (m - 2)
    return Order(f"Z[G]^-(m={m})", modulus, _identity_basis(m), gamma, 2 * m, "minus")


def _identity_basis(n: int) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def ring_by_name(name: str) -> Order:
    table = {"Z": ring_Z, "Z[i]": ring_ZI, "Z[H]": ring_ZH, "O": ring_O,
             "Z[w]": ring_ZW, "Z[omega]": ring_ZW}
    if name not in table:
        raise KeyError(f"unknown ring {name!r}")
    return table[name]()


def maximal_order(R: Order) -> Order:
    if R.name in ("Z", "Z[i]", "O", "Z[w]"):
        return R
    if R.name == "Z[H]":
        return ring_O()
    m = R.two_m // 2
    if m & (m - 1) == 0:
        return R  # Z[zeta_{2m}] is maximal when 2m is a power of 2
    raise NotImplementedError(f"maximal order of {R.name}")


@dataclass(frozen=True)
class MinusIdeal:
    """An ideal of an order, stored as the Hermite form of its Z-lattice."""

    order: Order
    rows: tuple

    @classmethod
    def generated_by(cls, order: Order, gens) -> "MinusIdeal":
        rows = []
        for g in gens:
            g = order.as_power(g)
            if not order.contains(g):
                raise ValueError(f"generator {g} is not in {order.name}")
            for b in order.basis_elements():
                rows.append(order.int_coords(order.mul(g, b)))
        return cls(order, tuple(tuple(r) for r in hnf(rows)))

    @classmethod
    def unit(cls, order: Order) -> "MinusIdeal":
        return cls.generated_by(order, [order.one()])

    @property
    def ring(self) -> str:
        return self.order.name

    def is_zero(self) -> bool:
        return not self.rows

    def has_finite_index(self) -> bool:
        return len(self.rows) == self.order.deg

    def index(self) -> int:
        if not self.has_finite_index():
            raise ValueError("ideal has infinite index")
        out = 1
        for i, r in enumerate(self.rows):
            out *= r[i]
        return out

    def elements(self) -> list:
        return [self.order.element(r) for r in self.rows]

    def generators(self) -> list:
        return [self.order.to_group(x) for x in self.elements()]

    def contains(self, x) -> bool:
        x = self.order.as_power(x)
        if not self.order.contains(x):
            return False
        return in_lattice(self.order.int_coords(x), [list(r) for r in self.rows])

    def __mul__(self, other: "MinusIdeal") -> "MinusIdeal":
        if other.order != self.order:
            raise ValueError("ideals of different orders")
        gens = [self.order.mul(a, b) for a in self.elements() for b in other.elements()]
        return MinusIdeal.generated_by(self.order, gens)

    def __add__(self, other: "MinusIdeal") -> "MinusIdeal":
        return MinusIdeal.generated_by(self.order, self.elements() + other.elements())

    def extend(self, order: Order) -> "MinusIdeal":
        """The ideal generated in a larger order (e.g. A -> A O)."""
        return MinusIdeal.generated_by(order, self.elements())

    def index_in(self, order: Order) -> int:
        """(order : self) for an ideal contained in ``order``."""
        return lattice_index([order.int_coords(x) for x in self.elements()])

    def __repr__(self):
        return f"MinusIdeal({self.order.name}, {list(map(list, self.rows))})"


# principal ideal domains among the orders

def _round(q: Fraction) -> int:
    return floor(q + Fraction(1, 2))


def _quadratic_gcd(R: Order, a, b):
    while any(b):
        q = R.mul(a, R.inverse(b))
        q = tuple(Fraction(_round(v)) for v in q)
        a, b = b, R.sub(a, R.mul(q, b))
    return a


def gaussian_normalize(x) -> tuple:
    """Associate a + b i with a > 0 and b >= 0."""
    R = ring_ZI()
    u = R.reduce([0, 1])
    y = R.reduce(x)
    if not any(y):
        return y
    for _ in range(4):
        if y[0] > 0 and y[1] >= 0:
            return y
        y = R.mul(y, u)
    raise AssertionError("no normalized associate")


def eisenstein_units() -> list:
    R = ring_ZW()
    w = R.reduce([0, 1])
    units = [R.one(), w, R.mul(w, w)]
    return units + [R.scale(-1, u) for u in units]


def eisenstein_normalize(x) -> tuple:
    """Associate b + c w with b > 0 and c <= 0."""
    R = ring_ZW()
    y = R.reduce(x)
    if not any(y):
        return y
    for u in eisenstein_units():
        z = R.mul(y, u)
        if z[0] > 0 and z[1] <= 0:
            return z
    raise AssertionError("no normalized associate")


def eisenstein_norm(x) -> Fraction:
    b, c = (Fraction(v) for v in x)
    return b * b - b * c + c * c


def o_components(x) -> tuple:
    """x in Q[H] -> (x_0, x_1) in Q x Q(w) with sigma -> 1 and sigma -> w."""
    c0, c1, c2 = (Fraction(v) for v in x)
    return c0 + c1 + c2, (c0 - c2, c1 - c2)


def o_from_components(x0, x1) -> tuple:
    R = ring_O()
    b, c = x1
    return R.add(R.scale(x0, E0), R.mul(E1, (Fraction(b), Fraction(c), Fraction(0))))


def principal_generator(I: MinusIdeal) -> tuple:
    """Normalized generator (power coordinates) of an ideal in a principal order."""
    R = I.order
    elts = I.elements()
    if R.name == "Z":
        g = 0
        for x in elts:
            g = gcd(g, int(x[0]))
        return (Fraction(g),)
    if R.name in ("Z[i]", "Z[w]"):
        g = R.zero()
        for x in elts:
            g = _quadratic_gcd(R, x, g) if any(g) else x
        return gaussian_normalize(g) if R.name == "Z[i]" else eisenstein_normalize(g)
    if R.name == "O":
        W = ring_ZW()
        a = 0
        b = W.zero()
        for x in elts:
            x0, x1 = o_components(x)
            a = gcd(a, int(x0))
            b = _quadratic_gcd(W, x1, b) if any(b) else W.reduce(x1)
        return o_from_components(a, eisenstein_normalize(b))
    raise NotImplementedError(f"{R.name} is not handled as a principal order")


def norm_form(x) -> int:
    """|x_0| * N(x_1) for x in O."""
    R = ring_O()
    x = R.as_power(x)
    if not R.contains(x):
        raise ValueError("element is not in O")
    x0, x1 = o_components(x)
    return int(abs(x0) * eisenstein_norm(x1))


def o_units() -> list:
    """The twelve units +-e_0 + e_1 u, u a sixth root of unity, of O."""
    return [o_from_components(s, u) for s in (1, -1) for u in eisenstein_units()]


def kappa(n: int, mm: int) -> GroupRingElement:
    """The element of Z[H] with Norm 2^(n + 2 mm) and e_0-part 2^n e_0.

    The e_1-component is (-1)^(n + mm) 2^mm, the sign that makes the
    element integral.
    """
    if n < 0 or mm < 0:
        raise ValueError("kappa needs nonnegative indices")
    x = o_from_components(2 ** n, ((-1) ** (n + mm) * 2 ** mm, 0))
    assert ring_ZH().contains(x)
    return ring_ZH().to_group(x)


def find_generator(A: MinusIdeal) -> tuple[GroupRingElement, bool]:
    """Generator dichotomy for an ideal of finite index in Z[H].

    Returns ``(g, principal)`` with g in A and O/AO ~ Z[H]/gZ[H]; when
    principal, A = g Z[H], otherwise (A : g Z[H]) = 3 and A O = A.
    """
    g, principal = find_generator_power(A)
    return ring_ZH().to_group(g), principal


def find_generator_power(A: MinusIdeal) -> tuple[tuple, bool]:
    ZH, O = ring_ZH(), ring_O()
    if A.order != ZH:
        raise ValueError("find_generator works on ideals of Z[H]")
    if A.is_zero():
        raise ValueError("zero ideal has no generator")
    if not A.has_finite_index():
        raise ValueError("ideal must have finite index")
    AO = A.extend(O)
    gp = principal_generator(AO)
    if AO.index() == 3 * A.index():
        return gp, False
    for u in o_units():
        g = O.mul(gp, u)
        if ZH.contains(g) and A.contains(g) and MinusIdeal.generated_by(ZH, [g]) == A:
            return g, True
    raise AssertionError("no generator found although A O != A")


def is_principal_zh(A: MinusIdeal) -> bool:
    """Principality of a Z[H]-ideal by exhausting O-unit multiples of a generator of A O."""
    ZH, O = ring_ZH(), ring_O()
    gp = principal_generator(A.extend(O))
    for u in o_units():
        g = O.mul(gp, u)
        if ZH.contains(g) and MinusIdeal.generated_by(ZH, [g]) == A:
            return True
    return False


def eisenstein_ideals(max_norm: int) -> list:
    """Normalized generators of all nonzero ideals of Z[w] of norm <= max_norm."""
    out = []
    b = 1
    while b * b <= max_norm:
        c = 0
        while b * b - b * c + c * c <= max_norm:
            out.append((Fraction(b), Fraction(c)))
            c -= 1
        b += 1
    return out


def zh_ideals(max_index: int) -> list:
    """All ideals of Z[H] of index <= max_index.

    Uses 3 A O within A within A O: every such A is 3 I plus an F_3-subspace of
    I / 3I for an O-ideal I of index <= 3 * max_index.
    """
    ZH, O = ring_ZH(), ring_O()
    lines = [v for v in product(range(3), repeat=3) if any(v) and v[next(i for i, a in enumerate(v) if a)] == 1]
    subspaces = [[]] + [[v] for v in lines]
    # planes: kernels of normalized functionals
    for f in lines:
        plane = [v for v in product(range(3), repeat=3) if sum(a * b for a, b in zip(f, v)) % 3 == 0]
        basis = []
        for v in plane:
            if any(v) and not _in_span3(v, basis):
                basis.append(v)
            if len(basis) == 2:
                break
        subspaces.append(basis)
    subspaces.append([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    seen = set()
    out = []
    bound = 3 * max_index
    for eis in eisenstein_ideals(bound):
        n1 = int(eisenstein_norm(eis))
        for a in range(1, bound // n1 + 1):
            I = MinusIdeal.generated_by(O, [o_from_components(a, eis)])
            Ib = I.elements()
            nI = a * n1
            for V in subspaces:
                if nI * 3 ** (3 - len(V)) > bound:
                    continue
                gens = [O.scale(3, x) for x in Ib]
                for v in V:
                    w = O.zero()
                    for k, x in zip(v, Ib):
                        w = O.add(w, O.scale(k, x))
                    gens.append(w)
                if not all(ZH.contains(x) for x in gens):
                    continue
                rows = tuple(tuple(r) for r in hnf([ZH.int_coords(x) for x in gens]))
                A = MinusIdeal(ZH, rows)
                if rows in seen or A.index() > max_index:
                    continue
                # closed under sigma
                sig = (0, 1, 0)
                if not all(A.contains(ZH.mul(x, sig)) for x in A.elements()):
                    continue
                seen.add(rows)
                out.append(A)
    return out


def _in_span3(v, basis) -> bool:
    for coeffs in product(range(3), repeat=len(basis)):
        w = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % 3 for i in range(3))
        if w == tuple(x % 3 for x in v):
            return True
    return False


def zh_ideals_bruteforce(max_index: int) -> list:
    """All sigma-stable full-rank sublattices of Z^3 of index <= max_index, by Hermite forms."""
    ZH = ring_ZH()
    out = []
    for a in range(1, max_index + 1):
        for b in range(1, max_index // a + 1):
            for c in range(1, max_index // (a * b) + 1):
                for x in range(b):
                    for y in range(c):
                        for z in range(c):
                            rows = ((a, x, y), (0, b, z), (0, 0, c))
                            A = MinusIdeal(ZH, rows)
                            if all(A.contains(ZH.mul(e, (0, 1, 0))) for e in A.elements()):
                                out.append(A)
    return out


def canonical_representative(x: GroupRingElement, units) -> GroupRingElement:
    """Lexicographically smallest coefficient vector among u * x."""
    return min((u * x for u in units), key=lambda y: y.coeffs)
