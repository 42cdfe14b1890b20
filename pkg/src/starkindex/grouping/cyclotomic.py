"""Polynomials over Q and exact arithmetic in cyclotomic fields.

Polynomials are tuples of coefficients, lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..linalg import det


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(a, b):
    """Division with remainder by a polynomial with nonzero leading term."""
    a = [Fraction(x) for x in poly_trim(a)]
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a.pop()
        a = poly_trim(a)
    return q, a


def poly_mod(a, modulus):
    """Reduce ``a`` modulo a monic polynomial, padding to ``deg(modulus)``."""
    n = len(modulus) - 1
    a = list(a)
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            for i in range(n + 1):
                a[k - n + i] -= c * modulus[i]
    a = a[:n] + [0] * (n - len(a))
    return a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial with integer coefficients."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = poly_divmod(num, cyclotomic_poly(d))
            assert not r
    return tuple(int(x) for x in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@dataclass(frozen=True)
class CyclotomicValue:
    """An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    n: int
    coords: tuple

    def __post_init__(self):
        deg = euler_phi(self.n)
        c = tuple(Fraction(x) for x in poly_mod(list(self.coords), cyclotomic_poly(self.n)))
        if len(c) != deg:
            c = c + (Fraction(0),) * (deg - len(c))
        object.__setattr__(self, "coords", c)

    @classmethod
    def root(cls, n: int, k: int = 1) -> "CyclotomicValue":
        """zeta_n ** k."""
        k %= n
        return cls(n, tuple([0] * k + [1]))

    @classmethod
    def rational(cls, n: int, q) -> "CyclotomicValue":
        return cls(n, (q,))

    def _check(self, other):
        if not isinstance(other, CyclotomicValue):
            other = CyclotomicValue.rational(self.n, other)
        if other.n != self.n:
            raise ValueError("cyclotomic values of different conductors")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicValue(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.n, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return CyclotomicValue(self.n, tuple(poly_mul(self.coords, other.coords)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def multiplication_matrix(self):
        deg = len(self.coords)
        return [list(CyclotomicValue(self.n, tuple(poly_mul([0] * k + [1], self.coords))).coords)
                for k in range(deg)]

    def norm(self) -> Fraction:
        """Field norm to Q, the determinant of multiplication."""
        return det(self.multiplication_matrix())

    def to_complex(self, ctx=None):
        """Numerical value at zeta_n = exp(2 pi i / n); ``ctx`` may be an mpmath context."""
        if ctx is None:
            import cmath
            z = cmath.exp(2j * cmath.pi / self.n)
            return sum(float(c) * z ** k for k, c in enumerate(self.coords))
        z = ctx.expjpi(ctx.mpf(2) / self.n)
        return ctx.fsum(ctx.mpf(c.numerator) / c.denominator * z ** k
                        for k, c in enumerate(self.coords))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.n}^{k}")
        return " + ".join(terms) or "0"
