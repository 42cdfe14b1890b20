"""Extension records and the structural checks they must pass."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..gmodule import ModulePresentation
from ..grouping import GroupSpec, minus_ring
from ..unitlattice import DataInconsistency, FieldSummary, LValueInput, MinusUnitLattice


def e_lower_bound(d: int, m: int) -> int:
    """Floor on e from the Herbrand quotient of the units: max(0, (d-1)m - 2)."""
    return max(0, (d - 1) * m - 2)


def v2(n: int) -> int:
    n = abs(int(n))
    if n == 0:
        raise ValueError("2-valuation of zero")
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


@dataclass
class ExtensionRecord:
    group: GroupSpec
    summary: FieldSummary
    units: MinusUnitLattice
    class_minus: ModulePresentation
    lvalues: LValueInput
    sub_F: "ExtensionRecord | None" = None
    provenance: dict = field(default_factory=dict)
    name: str = ""

    @property
    def m(self) -> int:
        return self.group.m

    @property
    def d(self) -> int:
        return self.group.d

    @property
    def ring(self):
        return minus_ring(self.m)

    @property
    def cl_order(self) -> int:
        return self.summary.cl_minus_order

    @property
    def c(self) -> int:
        return v2(self.cl_order)


@dataclass(frozen=True)
class CandidateUnit:
    coords: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if not any(self.coords):
            raise ValueError("candidate unit is zero")


def consistency_issues(r: ExtensionRecord) -> list:
    """(field path, message) pairs for every violated structural property."""
    issues = []
    s = r.summary
    m, d = r.m, r.d
    if r.units.m != m:
        issues.append(("minus_units.gamma_action", f"lattice rank {r.units.m} differs from m = {m}"))
    if s.h_K < 1 or s.h_Kplus < 1:
        issues.append(("field_summary", "class numbers must be positive"))
    elif s.h_K % s.h_Kplus:
        issues.append(("field_summary.h_Kplus", "h_Kplus does not divide h_K"))
    for key in ("t_S", "e"):
        if getattr(s, key) < 0:
            issues.append((f"field_summary.{key}", "must be nonnegative"))
    if s.e < e_lower_bound(d, m):
        issues.append(("field_summary.e", f"e = {s.e} is below the bound (d-1)m-2 = {e_lower_bound(d, m)}"))
    if s.h_K >= 1 and s.h_Kplus >= 1 and s.h_K % s.h_Kplus == 0:
        if s.c is not None and s.c != v2(s.h_K // s.h_Kplus):
            issues.append(("field_summary.c", f"c = {s.c} is not the 2-valuation of |Cl^-| = {s.h_K // s.h_Kplus}"))
        try:
            card = r.class_minus.cardinality()
        except ValueError:
            issues.append(("class_minus.relations", "class group presentation is not finite"))
        else:
            if card != s.h_K // s.h_Kplus:
                issues.append(("class_minus.relations",
                               f"presented module has {card} elements, h_K/h_Kplus = {s.h_K // s.h_Kplus}"))
    if r.class_minus.order.two_m != r.group.two_m:
        issues.append(("class_minus.ring", f"ring {r.class_minus.order.name} does not belong to a group of order {r.group.two_m}"))
    missing = r.lvalues.missing()
    if missing:
        issues.append(("l_values", f"missing odd characters {missing}"))
    if m == 3:
        issues += _sextic_issues(r)
    return issues


def _sextic_issues(r: ExtensionRecord) -> list:
    s = r.summary
    issues = []
    if s.e_prime is None:
        issues.append(("field_summary.e_prime", "sextic records need e_prime"))
        return issues
    diff = s.e - s.e_prime
    if diff < 0:
        issues.append(("field_summary.e_prime", "e - e_prime is negative"))
    elif diff % 2:
        issues.append(("field_summary.e_prime", "e - e_prime is odd"))
    elif diff < 2 * r.d - 2:
        issues.append(("field_summary.e_prime", f"e - e_prime = {diff} is below 2d - 2 = {2 * r.d - 2}"))
    if s.e_prime < e_lower_bound(r.d, 1):
        issues.append(("field_summary.e_prime", f"e_prime is below max(0, d-3) = {e_lower_bound(r.d, 1)}"))
    if s.h_K % 3 == 0:
        issues.append(("field_summary.h_K", "3 divides h_K; the sextic construction needs 3 to be prime to |Cl_K|"))
    if r.sub_F is None:
        issues.append(("sub_extension_F", "sextic records need the quadratic subextension block"))
    else:
        F = r.sub_F
        if F.m != 1:
            issues.append(("sub_extension_F.group", "F must be quadratic over k"))
        if s.c_prime is not None and F.summary.h_Kplus and F.summary.h_K % F.summary.h_Kplus == 0:
            if s.c_prime != v2(F.summary.h_K // F.summary.h_Kplus):
                issues.append(("field_summary.c_prime", "c_prime is not the 2-valuation of |Cl_F^-|"))
        if F.summary.t_S != s.t_S:
            issues.append(("sub_extension_F.field_summary.t_S", "t_S of F differs from t_S of K"))
        if F.summary.e != s.e_prime:
            issues.append(("sub_extension_F.field_summary.e", "e of F must equal e_prime"))
        issues += [("sub_extension_F." + p, msg) for p, msg in consistency_issues(F)]
    return issues


def validate(r: ExtensionRecord) -> ExtensionRecord:
    issues = consistency_issues(r)
    if issues:
        raise DataInconsistency("; ".join(f"{p}: {msg}" for p, msg in issues))
    return r
