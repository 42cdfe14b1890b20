"""Reading and writing record files."""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import mpmath

from ..gmodule import ModulePresentation
from ..grouping import GroupSpec, ring_by_name
from ..numerics import to_mpf
from ..starkgate.record import ExtensionRecord, consistency_issues
from ..unitlattice import DataInconsistency, FieldSummary, LValueInput, MinusUnitLattice
from .schema import RECORD_SCHEMA

EXIT_OK, EXIT_FAIL, EXIT_SCHEMA, EXIT_INCONSISTENT = 0, 1, 2, 3
RINGS = {1: ("Z",), 2: ("Z[i]",), 3: ("Z[H]", "O")}


class IngestError(Exception):
    """Rejected input; ``code`` is the process exit code and ``path`` the offending field."""

    def __init__(self, code: int, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.code = code
        self.path = path
        self.message = message


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _num(x):
    return to_mpf(x)


def _build(doc: dict, prefix: str, name: str) -> ExtensionRecord:
    g = doc["group"]
    try:
        group = GroupSpec(g["two_m"], g["d"])
    except ValueError as exc:
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.group", str(exc))
    m = group.m
    mu = doc["minus_units"]
    A = mu["gamma_action"]
    if len(A) != m or any(len(r) != m for r in A):
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.minus_units.gamma_action",
                          f"lattice rank must be m = {m}: expected a {m} x {m} matrix")
    logs = mu["log_embeddings"]
    if len(logs) != m or any(len(r) != m for r in logs):
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.minus_units.log_embeddings", f"expected a {m} x {m} matrix")
    try:
        units = MinusUnitLattice(m, A, [[_num(x) for x in r] for r in logs], float(_num(mu["precision"])))
    except DataInconsistency as exc:
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.minus_units.gamma_action",
                          f"{exc} (gamma must act with order 2m and tau = gamma^m as -1)")

    cm = doc["class_minus"]
    if cm["ring"] not in RINGS.get(m, ()):
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.class_minus.ring",
                          f"ring {cm['ring']} is not a minus ring for m = {m}")
    R = ring_by_name(cm["ring"])
    rels = cm["relations"]
    if rels:
        ngens = len(rels[0])
        for i, r in enumerate(rels):
            if len(r) != ngens:
                raise IngestError(EXIT_SCHEMA, f"{prefix}.class_minus.relations[{i}]", "relations must be rectangular")
            for j, x in enumerate(r):
                if len(x) != R.deg:
                    raise IngestError(EXIT_SCHEMA, f"{prefix}.class_minus.relations[{i}][{j}]",
                                      f"ring elements of {R.name} have {R.deg} coordinates")
        cl = ModulePresentation.build(R, ngens, rels)
    else:
        cl = ModulePresentation.zero(R)
    if not cl.is_finite():
        raise IngestError(EXIT_INCONSISTENT, f"{prefix}.class_minus.relations", "class group presentation is not finite")

    values, prec = {}, {}
    for i, lv in enumerate(doc["l_values"]):
        j = lv["chi_exponent"] % group.two_m
        if j % 2 == 0:
            raise IngestError(EXIT_INCONSISTENT, f"{prefix}.l_values[{i}].chi_exponent", "character is even")
        if j in values:
            raise IngestError(EXIT_INCONSISTENT, f"{prefix}.l_values[{i}].chi_exponent", "duplicate character")
        values[j] = mpmath.mpc(_num(lv["re"]), _num(lv["im"]))
        prec[j] = float(_num(lv["precision"]))
    lvals = LValueInput(group.two_m, values, prec, str(doc.get("provenance", {}).get("oracle", "")))

    fs = doc["field_summary"]
    summary = FieldSummary(fs["h_K"], fs["h_Kplus"], _num(fs["R_K"]), _num(fs["R_Kplus"]), fs["t_S"], fs["e"],
                           fs.get("c"), fs.get("e_prime"), fs.get("c_prime"), group.d, m)
    sub = None
    if "sub_extension_F" in doc:
        sub = _build(doc["sub_extension_F"], f"{prefix}.sub_extension_F", name + "/F")
    return ExtensionRecord(group, summary, units, cl, lvals, sub, dict(doc.get("provenance", {})), name)


def record_from_json(doc, name: str = "") -> ExtensionRecord:
    """Validate a decoded document and build the record; raises IngestError."""
    validator = jsonschema.Draft202012Validator(RECORD_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise IngestError(EXIT_SCHEMA, _path(e.absolute_path), e.message)
    rec = _build(doc, "$", name or str(doc["provenance"].get("name", "")))
    issues = consistency_issues(rec)
    if issues:
        path, msg = issues[0]
        raise IngestError(EXIT_INCONSISTENT, "$." + path, msg + (f" (+{len(issues) - 1} more)" if len(issues) > 1 else ""))
    return rec


def ingest(path) -> ExtensionRecord:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise IngestError(EXIT_SCHEMA, "$", f"cannot read {p}: {exc.strerror}")
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, ValueError, RecursionError) as exc:
        raise IngestError(EXIT_SCHEMA, "$", f"not a JSON document: {exc}")
    try:
        return record_from_json(doc, p.stem)
    except IngestError:
        raise
    except RecursionError:
        raise IngestError(EXIT_SCHEMA, "$", "document nested too deeply")
    except (ValueError, ArithmeticError, OverflowError) as exc:
        raise IngestError(EXIT_INCONSISTENT, "$", str(exc))


# serialization

def _dec(x, digits: int = 40) -> str:
    return mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False, min_fixed=-5, max_fixed=5)


def record_to_json(r: ExtensionRecord, top: bool = True) -> dict:
    s = r.summary
    fs = {"h_K": s.h_K, "h_Kplus": s.h_Kplus, "R_K": _dec(s.R_K), "R_Kplus": _dec(s.R_Kplus),
          "t_S": s.t_S, "e": s.e, "c": s.c if s.c is not None else r.c}
    if s.e_prime is not None:
        fs["e_prime"] = s.e_prime
    if s.c_prime is not None:
        fs["c_prime"] = s.c_prime
    doc = {
        "group": {"two_m": r.group.two_m, "d": r.group.d},
        "field_summary": fs,
        "minus_units": {"gamma_action": [list(map(int, row)) for row in r.units.gamma_action],
                        "log_embeddings": [[_dec(x) for x in row] for row in r.units.log_embeddings],
                        "precision": r.units.precision},
        "class_minus": {"ring": r.class_minus.order.name,
                        "relations": [[list(x) for x in rel] for rel in r.class_minus.relations]},
        "l_values": [{"chi_exponent": j, "re": _dec(mpmath.re(r.lvalues.values[j])),
                      "im": _dec(mpmath.im(r.lvalues.values[j])), "precision": r.lvalues.precision[j]}
                     for j in sorted(r.lvalues.values)],
    }
    if r.sub_F is not None:
        doc["sub_extension_F"] = record_to_json(r.sub_F, top=False)
    if top:
        prov = {"oracle": "", "version": "", "defining_polynomials": []}
        prov.update({k: v for k, v in r.provenance.items() if v is not None})
        prov["defining_polynomials"] = [str(x) for x in prov["defining_polynomials"]]
        prov = {k: (v if isinstance(v, (str, list)) else str(v)) for k, v in prov.items()}
        if r.name:
            prov.setdefault("name", r.name)
        doc["provenance"] = prov
    return doc
