"""Text rendering of verification reports."""
from __future__ import annotations


def _line(label: str, status: str, detail: str = "") -> str:
    return f"  {label:<22} {status:<13} {detail}".rstrip()


def render(report: dict) -> str:
    name = report.get("name") or "<record>"
    out = [f"record {name} (m={report.get('m')}, d={report.get('d')}): {report['status']}"]
    for diag in report.get("diagnostics", []):
        out.append(f"  ! {diag}")
    if "p1" in report:
        p1 = report["p1"]
        out.append(_line("P1", p1["status"], f"index {p1['index']} target {p1['target']}"))
    if "p2" in report:
        p2 = report["p2"]
        bad = [row for row in p2["table"] if row["status"] != "PASS"]
        nontriv = [row for row in p2["table"] if row["lhs"] != 1 or row["rhs"] != 1]
        detail = f"{len(p2['table'])} (p, psi) pairs up to p={p2['p_max']}"
        out.append(_line("P2", p2["status"], detail))
        for row in nontriv + bad:
            out.append(f"    p={row['p']:<3} {row['psi']:<28} {row['lhs']} vs {row['rhs']} {row['status']}")
    if "product_formula" in report:
        pf = report["product_formula"]
        out.append(_line("product formula", pf["status"], f"ratio {pf['ratio']}" + (f" ({pf['note']})" if pf["note"] else "")))
    for row in report.get("abs_lvalues", []):
        out.append(_line(f"|L'(0,chi^{row['chi_exponent']})|", row["status"], f"{row['lhs']} vs {row['rhs']}"))
    if "abelian" in report:
        ab = report["abelian"]
        out.append(_line("abelian condition", ab["status"], ab["detail"]))
    if "squareness" in report:
        sq = report["squareness"]
        word = {True: "is a square", False: "is not a square", None: "undecided"}[sq["is_square"]]
        out.append(_line("squareness", sq["status"],
                         f"{word} [{sq['verdict']}: {sq['inequality']}]; 2^r-th power for r <= {sq['power_level']}"))
    for key, label in (("lattice_consistency", "log consistency"), ("conjugate_lvalues", "conjugate L-values")):
        if key in report:
            out.append(_line(label, report[key]))
    if "class_number_formula" in report:
        cn = report["class_number_formula"]
        out.append(_line("class number formula", cn["status"], f"{cn['lhs']} vs {cn['rhs']}"))
    if "sub_extension_F" in report:
        sf = report["sub_extension_F"]
        out.append(_line("subextension F", sf["status"],
                         f"(U_F^- : Z N_H eta) = {sf['index']} target {sf['target']}, sign {sf['sign']:+d}"))
    return "\n".join(out)
