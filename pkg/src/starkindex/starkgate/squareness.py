"""When is the constructed unit a square, or a 2^r-th power?"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .record import ExtensionRecord, v2

NECESSARY_ONLY = "necessary-only"
IFF_TRUE = "iff-true"
IFF_FALSE = "iff-false"


@dataclass
class SquarenessVerdict:
    level: int
    verdict: str
    inequality: str
    holds: bool
    guaranteed_level: int
    max_level: int | None  # largest r with eta a 2^r-th power, from the invariants
    direct_level: int | None = None  # 2-valuation of gcd of the candidate's coordinates

    @property
    def consistent(self) -> bool:
        return self.direct_level is None or self.max_level is None or self.direct_level == self.max_level

    @property
    def is_square(self) -> bool | None:
        if self.verdict == NECESSARY_ONLY:
            return False if not self.holds else None
        return self.verdict == IFF_TRUE


def guaranteed_level(m: int, d: int) -> int:
    """Power level forced by the lower bounds on e alone."""
    if m == 1:
        return max(0, d - 3)
    if m == 2:
        return max(0, d - 2)
    if m == 3:
        return max(0, d - 3)
    return 0


def _c_prime(r: ExtensionRecord):
    s = r.summary
    if s.c_prime is not None:
        return s.c_prime
    if r.sub_F is not None:
        return r.sub_F.c
    return None


def max_power_level(r: ExtensionRecord) -> int | None:
    s = r.summary
    base = s.e + s.t_S + r.c
    if r.m == 1:
        return base
    if r.m == 2:
        return base // 2
    if r.m == 3:
        cp = _c_prime(r)
        if s.e_prime is None or cp is None:
            raise ValueError("sextic squareness needs e_prime and c_prime")
        # 2 is inert in Z[w], so the e_1-part of f is divisible by 2^((c - c')/2)
        return min(s.e_prime + s.t_S + cp, (s.e - s.e_prime) // 2 + (r.c - cp) // 2)
    return None


def squareness(r: ExtensionRecord, level: int = 1, candidate=None) -> SquarenessVerdict:
    """Whether the solution is a 2^level-th power in U^-.

    For m <= 3 the answer is exact; otherwise only the necessary condition
    e + t_S + c >= m (for a square) is reported.
    """
    if level < 1:
        raise ValueError("level must be positive")
    s = r.summary
    direct = None
    if candidate is not None:
        coords = list(getattr(candidate, "coords", candidate))
        g = 0
        for x in coords:
            g = gcd(g, int(x))
        direct = v2(g)
    glev = guaranteed_level(r.m, r.d)
    if r.m not in (1, 2, 3):
        lhs = s.e + s.t_S + r.c
        return SquarenessVerdict(level, NECESSARY_ONLY, f"e + t_S + c = {lhs} >= {r.m}", lhs >= r.m,
                                 glev, None, direct)
    top = max_power_level(r)
    holds = top >= level
    if r.m == 1:
        ineq = f"e + t_S + c = {s.e + s.t_S + r.c} >= {level}"
    elif r.m == 2:
        ineq = f"e + t_S + c = {s.e + s.t_S + r.c} >= {2 * level}"
    else:
        cp = _c_prime(r)
        ineq = (f"e' + t_S + c' = {s.e_prime + s.t_S + cp} >= {level} and "
                f"(e - e')/2 + (c - c')/2 = {(s.e - s.e_prime) // 2 + (r.c - cp) // 2} >= {level}")
    return SquarenessVerdict(level, IFF_TRUE if holds else IFF_FALSE, ineq, holds, glev, top, direct)
