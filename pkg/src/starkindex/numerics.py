"""Precision-tagged real comparisons."""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

DEFAULT_TOLERANCE = 1e-8
DEFAULT_PRECISION = 1e-10
WORKING_DPS = 40

mpmath.mp.dps = max(mpmath.mp.dps, WORKING_DPS)


def to_mpf(x):
    """Read a JSON number or decimal string without going through a float."""
    return mpmath.mpf(repr(x)) if isinstance(x, float) else mpmath.mpf(x)


@dataclass(frozen=True)
class Comparison:
    status: str
    lhs: object
    rhs: object
    difference: float
    radius: float
    tolerance: float

    def as_dict(self) -> dict:
        return {"status": self.status, "lhs": _fmt(self.lhs), "rhs": _fmt(self.rhs),
                "difference": float(self.difference), "radius": float(self.radius),
                "tolerance": self.tolerance}


def _fmt(x):
    if isinstance(x, mpmath.mpc):
        return {"re": mpmath.nstr(x.real, 15), "im": mpmath.nstr(x.imag, 15)}
    if isinstance(x, (mpmath.mpf, float)):
        return mpmath.nstr(mpmath.mpf(x), 15)
    return x


def compare(lhs, rhs, radius=0, tolerance: float = DEFAULT_TOLERANCE, relative: bool = True) -> Comparison:
    """PASS within tolerance, FAIL when off by more than tolerance plus the error radius.

    With ``relative`` the tolerance is scaled by max(1, |lhs|, |rhs|).
    """
    diff = abs(lhs - rhs)
    scale = max(mpmath.mpf(1), abs(lhs), abs(rhs)) if relative else mpmath.mpf(1)
    tol = tolerance * scale
    if diff <= tol:
        status = PASS
    elif diff - radius > tol:
        status = FAIL
    else:
        status = INCONCLUSIVE
    return Comparison(status, lhs, rhs, diff, radius, tolerance)


def worst(statuses) -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS
