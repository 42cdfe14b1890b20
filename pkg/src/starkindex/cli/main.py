"""Command line: ``starkindex verify|synth|schema``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from ..numerics import DEFAULT_TOLERANCE, FAIL, INCONCLUSIVE
from ..starkgate import random_record, verify_record
from .ingest import EXIT_FAIL, EXIT_INCONSISTENT, EXIT_OK, EXIT_SCHEMA, IngestError, ingest, record_to_json
from .report import render
from .schema import schema_text

REJECTED = "REJECTED"


def verify_file(path, p_max: int = 50, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """Ingest and verify one file; never raises on bad input."""
    try:
        rec = ingest(path)
    except IngestError as exc:
        return {"name": Path(path).stem, "file": str(path), "status": REJECTED, "exit_code": exc.code,
                "diagnostics": [f"{exc.path}: {exc.message}"]}
    rep = verify_record(rec, p_max, tolerance)
    rep["file"] = str(path)
    return rep


def run_verify(paths, p_max: int = 50, tolerance: float = DEFAULT_TOLERANCE, jobs: int = 1) -> list:
    """Reports in input order."""
    work = partial(verify_file, p_max=p_max, tolerance=tolerance)
    paths = [str(p) for p in paths]
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, paths))
    return [work(p) for p in paths]


def exit_code(reports, strict: bool = False) -> int:
    codes = [r["exit_code"] for r in reports if r["status"] == REJECTED]
    if EXIT_SCHEMA in codes:
        return EXIT_SCHEMA
    if EXIT_INCONSISTENT in codes:
        return EXIT_INCONSISTENT
    statuses = {r["status"] for r in reports}
    if FAIL in statuses or (strict and INCONCLUSIVE in statuses):
        return EXIT_FAIL
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="starkindex", description="Verify index formulae for minus-part unit data.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="verify record files")
    v.add_argument("files", nargs="*")
    v.add_argument("--p-max", type=int, default=50)
    v.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    v.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    v.add_argument("--strict", action="store_true", help="treat INCONCLUSIVE as FAIL")
    v.add_argument("--jobs", type=int, default=1)
    s = sub.add_parser("synth", help="write random consistent records")
    s.add_argument("--m", type=int, choices=(1, 2, 3), default=1)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--d", type=int, default=None)
    s.add_argument("--out", default=".")
    sub.add_parser("schema", help="print the record JSON schema")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "schema":
        print(schema_text())
        return EXIT_OK
    if args.command == "synth":
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k in range(args.count):
            seed = args.seed + k
            rec = random_record(args.m, seed, args.d)
            path = out / f"synthetic_m{args.m}_{seed}.json"
            path.write_text(json.dumps(record_to_json(rec), indent=2) + "\n")
            print(path)
        return EXIT_OK
    reports = run_verify(args.files, args.p_max, args.tolerance, args.jobs)
    for r in reports:
        if r["status"] == REJECTED:
            print(f"{r['file']}: rejected (exit {r['exit_code']}): {r['diagnostics'][0]}", file=sys.stderr)
    code = exit_code(reports, args.strict)
    if args.json:
        print(json.dumps({"records": reports, "exit_code": code}, indent=2, sort_keys=True, default=str))
    else:
        for r in reports:
            print(render(r))
        print(f"{len(reports)} record(s); exit {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
