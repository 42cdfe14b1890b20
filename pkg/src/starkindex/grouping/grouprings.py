"""The group ring Q[G] of a cyclic group G = <gamma> of order 2m."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import mobius, totient

from .cyclotomic import CyclotomicValue


@dataclass(frozen=True)
class GroupSpec:
    two_m: int
    d: int = 1

    def __post_init__(self):
        if self.two_m < 2 or self.two_m % 2:
            raise ValueError(f"group order must be a positive even integer, got {self.two_m}")
        if self.d < 1:
            raise ValueError("base degree d must be positive")

    @property
    def m(self) -> int:
        return self.two_m // 2


@dataclass(frozen=True)
class GroupRingElement:
    """sum_j coeffs[j] * gamma^j with exact rational coefficients."""

    group: GroupSpec
    coeffs: tuple

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coeffs)
        if len(c) != self.group.two_m:
            raise ValueError(f"expected {self.group.two_m} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, g: GroupSpec):
        return cls(g, (0,) * g.two_m)

    @classmethod
    def scalar(cls, g: GroupSpec, q):
        return cls(g, (q,) + (0,) * (g.two_m - 1))

    @classmethod
    def gamma(cls, g: GroupSpec, j: int = 1):
        c = [0] * g.two_m
        c[j % g.two_m] = 1
        return cls(g, tuple(c))

    @classmethod
    def from_powers(cls, g: GroupSpec, terms: dict):
        """Build from ``{exponent: coefficient}``."""
        c = [Fraction(0)] * g.two_m
        for j, q in terms.items():
            c[j % g.two_m] += Fraction(q)
        return cls(g, tuple(c))

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            if other.group.two_m != self.group.two_m:
                raise ValueError("elements of different group rings")
            return other
        return GroupRingElement.scalar(self.group, other)

    def __add__(self, other):
        other = self._coerce(other)
        return GroupRingElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GroupRingElement):
            q = Fraction(other)
            return GroupRingElement(self.group, tuple(q * a for a in self.coeffs))
        other = self._coerce(other)
        n = self.group.two_m
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return GroupRingElement(self.group, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = GroupRingElement.scalar(self.group, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_minus(self) -> bool:
        return minus_idempotent(self.group) * self == self

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*g^{j}")
        return "GroupRingElement(" + (" + ".join(terms) or "0") + ")"


def minus_idempotent(g: GroupSpec) -> GroupRingElement:
    """e^- = (1 - tau)/2 with tau = gamma^m."""
    return GroupRingElement.from_powers(g, {0: Fraction(1, 2), g.m: Fraction(-1, 2)})


@dataclass(frozen=True)
class Character:
    """chi_j with chi_j(gamma) = zeta_{2m}^j."""

    two_m: int
    j: int

    @property
    def order(self) -> int:
        return self.two_m // gcd(self.j, self.two_m)

    def is_odd(self) -> bool:
        return self.j % 2 == 1

    def value(self, k: int = 1) -> CyclotomicValue:
        """chi_j(gamma^k) as an element of Q(zeta_order)."""
        n = self.order
        step = self.two_m // n
        return CyclotomicValue.root(n, (self.j // step) * k)

    def evaluate(self, x: GroupRingElement) -> CyclotomicValue:
        n = self.order
        out = CyclotomicValue.rational(n, 0)
        for k, c in enumerate(x.coeffs):
            if c:
                out = out + self.value(k) * c
        return out

    def complex_value(self, k: int, ctx):
        """Numerical chi_j(gamma^k) in an mpmath context."""
        return ctx.expjpi(ctx.mpf(2 * self.j * k) / self.two_m)


def odd_characters(g: GroupSpec) -> list[Character]:
    return [Character(g.two_m, j) for j in range(1, g.two_m, 2)]


def _ramanujan_sum(n: int, k: int) -> int:
    q = n // gcd(n, k)
    return int(mobius(q)) * int(totient(n)) // int(totient(q))


def odd_classes(g: GroupSpec) -> dict[int, list[int]]:
    """Galois classes of odd characters, keyed by character order (ascending).

    The class of order n consists of the chi_j with gcd(j, 2m) = 2m/n.
    """
    classes: dict[int, list[int]] = {}
    for ch in odd_characters(g):
        classes.setdefault(ch.order, []).append(ch.j)
    return dict(sorted(classes.items()))


def rational_idempotents(g: GroupSpec) -> dict[int, GroupRingElement]:
    """e_xi for every odd rational character xi, keyed by the common order of its characters."""
    out = {}
    for n in odd_classes(g):
        coeffs = [Fraction(_ramanujan_sum(n, k), g.two_m) for k in range(g.two_m)]
        out[n] = GroupRingElement(g, tuple(coeffs))
    return out


def chosen_character(g: GroupSpec, n: int) -> Character:
    """Representative of the class of order n: the smallest odd exponent."""
    return Character(g.two_m, min(odd_classes(g)[n]))


def to_product_form(x: GroupRingElement, g: GroupSpec | None = None) -> list[CyclotomicValue]:
    """Image of a minus element in the product of the fields Q(xi).

    Components follow the class order of ``odd_classes``; each one is
    chi(x) for the character with the smallest odd exponent in its class.
    """
    g = g or x.group
    if not x.is_minus():
        raise ValueError("element is not in the minus part")
    return [chosen_character(g, n).evaluate(x) for n in odd_classes(g)]


def trivial_units(g: GroupSpec) -> list[GroupRingElement]:
    """The elements +-gamma^j."""
    return [s * GroupRingElement.gamma(g, j) for s in (1, -1) for j in range(g.two_m)]
