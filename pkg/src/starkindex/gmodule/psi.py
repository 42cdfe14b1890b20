"""p-adic characters of the cyclic group and psi-components of finite modules.

For p prime to 2m the irreducible Z_p-characters are the orbits of exponents
j (chi_j(gamma) = zeta^j) under j -> p j mod 2m.  The orbit idempotent is
computed in F_p[x]/(g), g an irreducible factor of the 2m-th cyclotomic
polynomial mod p, so that zeta = x mod g pins down the labelling, and then
lifted to Z/p^k by e <- 3e^2 - 2e^3.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import Poly, cyclotomic_poly, factorint, symbols

from ..linalg import identity, lattice_index, matmul
from .presentation import ActionModule, ModulePresentation, fitting_ideal

_X = symbols("x")


@dataclass(frozen=True)
class PsiCharacter:
    p: int
    two_m: int
    exponents: tuple  # sorted orbit of exponents j

    def is_odd(self) -> bool:
        return self.exponents[0] % 2 == 1

    def __str__(self):
        return f"psi[p={self.p}; chi^{'{'}{','.join(map(str, self.exponents))}{'}'}]"


def psi_characters(two_m: int, p: int, odd_only: bool = False) -> list[PsiCharacter]:
    if two_m % p == 0:
        raise ValueError("idempotent not liftable: p divides the group order")
    seen = set()
    out = []
    for j in range(two_m):
        if j in seen:
            continue
        orbit = set()
        x = j
        while x not in orbit:
            orbit.add(x)
            x = x * p % two_m
        seen |= orbit
        ch = PsiCharacter(p, two_m, tuple(sorted(orbit)))
        if not odd_only or ch.is_odd():
            out.append(ch)
    return out


# arithmetic in F_p[x]/(g)

def _mulmod(a, b, g, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    n = len(g) - 1
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c:
            for i in range(n + 1):
                out[k - n + i] = (out[k - n + i] - c * g[i]) % p
    out = out[:n] + [0] * (n - len(out))
    return out


@lru_cache(maxsize=None)
def _root_field(two_m: int, p: int):
    """An irreducible factor g of Phi_{2m} mod p, lowest degree first and monic."""
    P = Poly(cyclotomic_poly(two_m, _X), _X, modulus=p)
    factors = sorted((f for f, _ in P.factor_list()[1]), key=lambda f: [int(c) % p for c in f.all_coeffs()])
    g = [int(c) % p for c in reversed(factors[0].all_coeffs())]
    inv = pow(g[-1], -1, p)
    return tuple(c * inv % p for c in g)


@lru_cache(maxsize=None)
def idempotent_mod_p(psi: PsiCharacter) -> tuple:
    """Coefficients c_k (mod p) of e_psi = sum_k c_k gamma^k."""
    p, n = psi.p, psi.two_m
    g = list(_root_field(n, p))
    deg = len(g) - 1
    powers = []
    z = [1] + [0] * (deg - 1)
    x = ([0, 1] + [0] * deg)[:deg] if deg > 1 else [(-g[0]) % p]
    for _ in range(n):
        powers.append(z)
        z = _mulmod(z, x, g, p)
    inv2m = pow(n, -1, p)
    coeffs = []
    for k in range(n):
        s = [0] * deg
        for j in psi.exponents:
            s = [(a + b) % p for a, b in zip(s, powers[(-j * k) % n])]
        if any(s[1:]):
            raise AssertionError("orbit idempotent is not rational")
        coeffs.append(s[0] * inv2m % p)
    return tuple(coeffs)


def _cyc_mul(a, b, mod):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[(i + j) % n] = (out[(i + j) % n] + x * y) % mod
    return out


def idempotent_mod(psi: PsiCharacter, k: int) -> tuple:
    """e_psi modulo p^k in (Z/p^k)[gamma]."""
    mod = psi.p ** k
    e = list(idempotent_mod_p(psi))
    prec = psi.p
    while prec < mod:
        prec = min(prec * prec, mod)
        e2 = _cyc_mul(e, e, mod)
        e3 = _cyc_mul(e2, e, mod)
        e = [(3 * a - 2 * b) % mod for a, b in zip(e2, e3)]
    assert _cyc_mul(e, e, mod) == [x % mod for x in e]
    return tuple(e)


def poly_of_action(coeffs, X) -> list:
    """sum_k coeffs[k] X^k."""
    n = len(X)
    out = [[0] * n for _ in range(n)]
    P = identity(n)
    for c in coeffs:
        if c:
            out = [[o + c * v for o, v in zip(ro, rv)] for ro, rv in zip(out, P)]
        P = matmul(P, X)
    return out


def _as_action(M) -> ActionModule:
    if isinstance(M, ModulePresentation):
        return M.action_module()
    return M


def psi_component_order(M, psi: PsiCharacter) -> int:
    """|M^psi| = |e_psi (M tensor Z_p)| for a finite module M."""
    A = _as_action(M)
    if A.two_m % psi.p == 0:
        raise ValueError("idempotent not liftable: p divides the group order")
    if A.two_m != psi.two_m:
        raise ValueError("character of a different group")
    n = A.n
    if n == 0:
        return 1
    size = A.order()
    k = factorint(size).get(psi.p, 0)
    if k == 0:
        return 1
    e = idempotent_mod(psi, k)
    E = poly_of_action(e, [list(r) for r in A.action])
    pk = psi.p ** k
    rows = [list(r) for r in A.relations]
    rows += [[pk * int(i == j) for j in range(n)] for i in range(n)]
    rows += [[int(i == j) - E[i][j] for j in range(n)] for i in range(n)]
    return lattice_index(rows)


def fitting_side_order(p: ModulePresentation, psi: PsiCharacter) -> int:
    """|(R / Fitt_R(M))^psi| for the ring R of the presentation."""
    F = fitting_ideal(p)
    return psi_component_order(ModulePresentation.cyclic(F), psi)
