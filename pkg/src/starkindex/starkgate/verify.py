"""Run every check on one record and collect the evidence."""
from __future__ import annotations

import mpmath

from ..numerics import DEFAULT_TOLERANCE, FAIL, INCONCLUSIVE, PASS, compare, worst
from ..unitlattice import DataInconsistency, abs_lvalue_check, prodform_check
from .checks import abelian_condition, check_p1, p2_table, sub_field_check
from .construct import construct
from .record import ExtensionRecord, consistency_issues
from .squareness import squareness


def _s(x, digits: int = 15) -> str:
    return mpmath.nstr(x, digits)


def class_number_formula(r: ExtensionRecord, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """|prod L'(0, chi)| against 2^t_S h_K R_K / (h_K+ R_K+)."""
    s = r.summary
    lhs = abs(r.lvalues.product())
    rhs = mpmath.mpf(2) ** s.t_S * s.h_K * mpmath.mpf(s.R_K) / (s.h_Kplus * mpmath.mpf(s.R_Kplus))
    cmp = compare(lhs, rhs, r.lvalues.product_radius() + rhs * r.units.precision, tolerance)
    return {"status": cmp.status, "lhs": _s(lhs), "rhs": _s(rhs)}


def verify_record(r: ExtensionRecord, p_max: int = 50, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """A JSON-ready report; "status" is the worst verdict over all checks."""
    out = {"name": r.name, "m": r.m, "d": r.d, "diagnostics": []}
    issues = consistency_issues(r)
    if issues:
        out["diagnostics"] = [f"{p}: {msg}" for p, msg in issues]
        out["status"] = FAIL
        return out
    statuses = []
    try:
        cand = construct(r)
    except (DataInconsistency, NotImplementedError) as exc:
        out["diagnostics"].append(str(exc))
        out["status"] = FAIL
        return out
    out["candidate"] = list(cand.coords)

    idx, target, ok = check_p1(r, cand)
    out["p1"] = {"status": PASS if ok else FAIL, "index": idx, "target": target}
    statuses.append(out["p1"]["status"])

    rows = p2_table(r, cand, p_max)
    p2_ok = all(row.passed for row in rows)
    out["p2"] = {"status": PASS if p2_ok else FAIL, "p_max": p_max,
                 "table": [{"p": row.p, "psi": row.psi, "lhs": row.lhs, "rhs": row.rhs,
                            "status": PASS if row.passed else FAIL} for row in rows]}
    statuses.append(out["p2"]["status"])

    pf = prodform_check(r.units, cand.coords, r.lvalues, tolerance)
    out["product_formula"] = {"status": pf.status, "lhs": _s(pf.lhs), "rhs": _s(pf.rhs),
                              "ratio": None if pf.ratio is None else _s(pf.ratio), "note": pf.note}
    statuses.append(pf.status)

    absl = []
    for j in range(1, 2 * r.m, 2):
        cmp = abs_lvalue_check(r.units, cand.coords, r.lvalues, j, tolerance=tolerance)
        absl.append({"chi_exponent": j, "status": cmp.status, "lhs": _s(cmp.lhs), "rhs": _s(cmp.rhs)})
        statuses.append(cmp.status)
    out["abs_lvalues"] = absl

    ab = abelian_condition(r, cand)
    out["abelian"] = {"status": ab.status, "direct": ab.direct, "criterion": ab.criterion, "detail": ab.detail}
    statuses.append(ab.status)

    sq = squareness(r, 1, cand)
    out["squareness"] = {"verdict": sq.verdict, "is_square": sq.is_square, "inequality": sq.inequality,
                         "power_level": sq.max_level, "guaranteed_level": sq.guaranteed_level,
                         "direct_level": sq.direct_level, "status": PASS if sq.consistent else FAIL}
    statuses.append(out["squareness"]["status"])

    out["lattice_consistency"] = r.units.consistency(tolerance)
    out["conjugate_lvalues"] = r.lvalues.conjugate_consistency(tolerance)
    out["class_number_formula"] = class_number_formula(r, tolerance)
    statuses += [out["lattice_consistency"], out["conjugate_lvalues"], out["class_number_formula"]["status"]]

    if r.m == 3:
        sf = sub_field_check(r, cand, tolerance)
        out["sub_extension_F"] = {"status": sf.status, "norm_surjective": sf.norm_surjective,
                                  "index": str(sf.norm_image_index), "target": sf.norm_image_target,
                                  "matches_quadratic": sf.matches_quadratic, "sign": sf.sign,
                                  "lvalue": sf.lvalue, "log_orientation": sf.log_orientation,
                                  "problems": sf.problems}
        statuses.append(sf.status)
    out["status"] = worst(statuses)
    return out


def exit_status(reports, strict: bool = False) -> int:
    st = worst(r["status"] for r in reports) if reports else PASS
    if st == FAIL or (strict and st == INCONCLUSIVE):
        return 1
    return 0
