"""Acceptance gate: one PASS/FAIL line per criterion, limits pinned from the contract."""
from __future__ import annotations

import json
import random
import time
from fractions import Fraction
from itertools import product

import mpmath
import pytest
from sympy import factorint, primerange

from conftest import MAXIMAL_RINGS, EXAMPLE_FIXTURES, acceptance_line, random_presentation
from starkindex.cli import ingest, run_verify
from starkindex.cli.ingest import EXIT_INCONSISTENT, EXIT_OK, IngestError, record_from_json, record_to_json
from starkindex.cohomology import CyclicAction, check_hexagon, herbrand_quotient, tate_h0, tate_h1
from starkindex.gmodule import fitting_side_order, order_from_fitting, psi_characters, psi_component_order
from starkindex.grouping import MinusIdeal, find_generator, kappa, ring_O, ring_ZH
from starkindex.grouping.orders import zh_ideals, zh_ideals_bruteforce
from starkindex.linalg import int_det, lattice_index
from starkindex.starkgate import (abelian_condition, check_p1, construct, e_lower_bound, p2_table,
                                  random_record)
from starkindex.unitlattice import detgroup_factorize, prodform_check

# -- 1 ---------------------------------------------------------------------------------------------


def _antisymmetric(rng, m):
    half = [Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(m)]
    return half + [-x for x in half]


def test_criterion_01_detgroup():
    rng = random.Random(1)
    inputs = {m: [_antisymmetric(rng, m) for _ in range(200)] for m in (1, 2, 3)}
    t0 = time.perf_counter()
    mismatches = sum(lhs != rhs for m in inputs for lhs, rhs in map(detgroup_factorize, inputs[m]))
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 1.0
    acceptance_line(1, ok, f"detgroup lhs = rhs exactly on 3 x 200 inputs, {mismatches} mismatches, {dt:.2f}s (< 1s)")
    assert ok


# -- 2 ---------------------------------------------------------------------------------------------


def test_criterion_02_fitting_order():
    rng = random.Random(2)
    t0 = time.perf_counter()
    bad, nontrivial = 0, 0
    for k in range(500):
        p = random_presentation(rng, MAXIMAL_RINGS[k % 4])
        brute = p.order_bruteforce()
        assert brute <= 2000
        bad += order_from_fitting(p) != brute
        nontrivial += brute > 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 30
    acceptance_line(2, ok, f"order_from_fitting = brute force on 500 presentations over Z, Z[i], Z[w], O "
                           f"({nontrivial} nontrivial), {bad} mismatches, {dt:.1f}s (< 30s)")
    assert ok


# -- 3 ---------------------------------------------------------------------------------------------


def test_criterion_03_psi_components():
    rng = random.Random(3)
    t0 = time.perf_counter()
    bad = checked = 0
    for k in range(100):
        p = random_presentation(rng, ("Z", "Z[i]", "Z[H]")[k % 3])
        two_m, size = p.order.two_m, p.cardinality()
        for q in primerange(2, 51):
            if two_m % q == 0:
                continue
            total = 1
            for psi in psi_characters(two_m, q):
                a = psi_component_order(p, psi)
                bad += a != fitting_side_order(p, psi)
                total *= a
                checked += 1
            bad += total != q ** factorint(size).get(q, 0)
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 60
    acceptance_line(3, ok, f"psi orders multiply to the p-part and match the Fitting side "
                           f"({checked} components, p <= 50), {bad} mismatches, {dt:.1f}s (< 60s)")
    assert ok


# -- 4 ---------------------------------------------------------------------------------------------


def _mult_det(x) -> int:
    return abs(int_det(ring_ZH().mult_matrix(x)))


def test_criterion_04_generator_dichotomy():
    ZH, O = ring_ZH(), ring_O()
    t0 = time.perf_counter()
    ideals = zh_ideals(200)
    bad = []
    principal_count = 0
    for A in ideals:
        g, principal = find_generator(A)
        gp = ZH.from_group(g)
        gA = MinusIdeal.generated_by(ZH, [gp])
        idx = gA.index() // A.index()
        AO = A.extend(O)
        if not A.contains(gp) or gA.index() % A.index() or idx not in (1, 3):
            bad.append(A)
        elif (idx == 1) != principal:
            bad.append(A)
        elif not principal and AO.index_in(ZH) != A.index():
            # A O = A certifies non-principality: A = hZ[H] would force hO = hZ[H]
            bad.append(A)
        elif AO.index() != _mult_det(gp):
            bad.append(A)
        principal_count += principal
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    acceptance_line(4, ok, f"find_generator dichotomy on all {len(ideals)} sigma-stable ideals of index <= 200 "
                           f"({principal_count} principal), {len(bad)} failures, {dt:.1f}s (< 120s)")
    assert ok


def test_criterion_04_enumeration_is_exhaustive():
    # the ideal list used above agrees with a plain Hermite-form search where that search is cheap
    fast = {A.rows for A in zh_ideals(40)}
    slow = {A.rows for A in zh_ideals_bruteforce(40)}
    assert fast == slow


# -- 5 ---------------------------------------------------------------------------------------------


def _norm_sigma(a, b, c) -> int:
    # a + b sigma + c sigma^2: |a + b + c| times the Eisenstein norm of the e_1 part
    return abs(a + b + c) * (a * a + b * b + c * c - a * b - b * c - c * a)


def _sigma_orbit(x):
    a, b, c = x
    return {(a, b, c), (c, a, b), (b, c, a)}


def test_criterion_05_kappa():
    ZH = ring_ZH()
    problems = []
    for n, mm in product(range(4), repeat=2):
        k = ZH.from_group(kappa(n, mm))
        if not ZH.contains(k):
            problems.append((n, mm, "not integral"))
            continue
        x = tuple(int(v) for v in ZH.int_coords(k))
        if _norm_sigma(*x) != 2 ** (n + 2 * mm):
            problems.append((n, mm, "norm"))
        if sum(x) != 2 ** n:
            problems.append((n, mm, "e_0 part"))
        bound = 2 ** (n + 2 * mm)
        found = set()
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                c = 2 ** n - a - b
                if abs(c) <= bound and _norm_sigma(a, b, c) == bound:
                    found.add((a, b, c))
        if found != _sigma_orbit(x):
            problems.append((n, mm, f"uniqueness: {sorted(found)}"))
    ok = not problems
    acceptance_line(5, ok, f"kappa(n, mm), n, mm <= 3: integral, Norm 2^(n+2mm), e_0-part 2^n, unique up to sigma; "
                           f"{len(problems)} problems")
    assert ok, problems


# -- 6 ---------------------------------------------------------------------------------------------


def test_criterion_06_index_three():
    ZH, O = ring_ZH(), ring_O()
    idx = lattice_index([list(b) for b in ZH.basis_elements()], [list(b) for b in O.basis_elements()])
    ok = idx == 3
    acceptance_line(6, ok, f"(O : Z[H]) = {idx}")
    assert ok


# -- 7 ---------------------------------------------------------------------------------------------


def _regular(n, k=1):
    N = n * k
    X = [[0] * N for _ in range(N)]
    for blk in range(k):
        for i in range(n):
            X[blk * n + i][blk * n + (i + 1) % n] = 1
    return X


def random_finite_action(rng) -> CyclicAction:
    """A quotient of Z[C_n]^k by a random finite-index submodule."""
    n, k = rng.randint(2, 6), rng.randint(1, 2)
    X = _regular(n, k)
    N = n * k
    gens = [[rng.randint(-3, 3) for _ in range(N)] for _ in range(rng.randint(0, 2))]
    gens.append([rng.randint(2, 6) * int(i == 0) for i in range(N)])
    if k == 2:
        gens.append([rng.randint(2, 6) * int(i == n) for i in range(N)])
    rels = []
    for v in gens:
        w = v
        for _ in range(n):
            rels.append(w)
            w = [sum(w[i] * X[i][j] for i in range(N)) for j in range(N)]
    return CyclicAction(n, X, rels)


def random_lattice_action(rng, n) -> CyclicAction:
    """A direct sum of Z trivial, Z by -1 (n even), Z[C_n] and finite pieces."""
    blocks = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["triv", "sign", "reg", "finite"] if n % 2 == 0 else ["triv", "reg", "finite"])
        if kind == "triv":
            blocks.append(([[1]], []))
        elif kind == "sign":
            blocks.append(([[-1]], []))
        elif kind == "reg":
            blocks.append((_regular(n), []))
        else:
            d = rng.randint(2, 5)
            blocks.append(([[1]] if rng.random() < 0.5 or n % 2 else [[-1]], [[d]]))
    size = sum(len(X) for X, _ in blocks)
    X = [[0] * size for _ in range(size)]
    rels = []
    off = 0
    for B, R in blocks:
        for i in range(len(B)):
            for j in range(len(B)):
                X[off + i][off + j] = B[i][j]
        for r in R:
            row = [0] * size
            row[off:off + len(r)] = r
            rels.append(row)
        off += len(B)
    return CyclicAction(n, X, rels)


def _direct_sum(M: CyclicAction, P: CyclicAction):
    a, b = M.rank, P.rank
    X = [list(r) + [0] * b for r in M.action] + [[0] * a + list(r) for r in P.action]
    rels = [list(r) + [0] * b for r in M.relations] + [[0] * a + list(r) for r in P.relations]
    f = [[int(i == j) for j in range(a + b)] for i in range(a)]
    g = [[int(i == j + a) for j in range(b)] for i in range(a + b)]
    return CyclicAction(M.n, X, rels), f, g


def test_criterion_07_tate():
    rng = random.Random(7)
    zh = CyclicAction(3, _regular(3))
    h1_trivial = tate_h1(zh) == [] or all(d == 1 for d in tate_h1(zh))
    finite_q = [herbrand_quotient(random_finite_action(rng)) for _ in range(100)]
    mult_ok = 0
    for _ in range(100):
        n = rng.randint(2, 6)
        M, P = random_lattice_action(rng, n), random_lattice_action(rng, n)
        N, f, g = _direct_sum(M, P)
        rep = check_hexagon(M, N, P, f, g)
        direct = herbrand_quotient(N) == herbrand_quotient(M) * herbrand_quotient(P)
        mult_ok += rep.exact_input and rep.multiplicative and rep.alternating_product == 1 and direct
    ok = h1_trivial and all(q == 1 for q in finite_q) and mult_ok == 100
    acceptance_line(7, ok, f"H^1(Z[H]) trivial: {h1_trivial}; Q = 1 on {sum(q == 1 for q in finite_q)}/100 finite "
                           f"modules; multiplicative on {mult_ok}/100 split sequences")
    assert ok


# -- 8 ---------------------------------------------------------------------------------------------


def test_criterion_08_synthetic_end_to_end():
    t0 = time.perf_counter()
    failures = []
    rows = 0
    for m in (1, 2, 3):
        for seed in range(50):
            r = random_record(m, seed)
            c = construct(r)
            _, _, p1 = check_p1(r, c)
            table = p2_table(r, c, 50)
            rows += len(table)
            ab = abelian_condition(r, c)
            p2 = all(row.passed for row in table)
            need_ab = m in (1, 2) or (r.summary.e - r.summary.e_prime) >= 2
            if not (p1 and p2 and (ab.status == "PASS" or not need_ab)):
                failures.append((m, seed, p1, p2, ab.status))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 120
    acceptance_line(8, ok, f"3 x 50 synthetic records: P1 exact, P2 on {rows} (p, psi) rows, abelian condition; "
                           f"{len(failures)} failures, {dt:.1f}s (< 120s)")
    assert ok, failures


# -- 9 ---------------------------------------------------------------------------------------------

WORKED_EXAMPLES = {
    "quadratic_sqrt5_p11_v2": False,
    "quadratic_sqrt5_sqrt5q11_v1": True,
    "quadratic_cubic_a13_v2v3": False,
    "quadratic_cubic_b24_v2v3": True,
    "sextic_cubic_a9_v2v3": False,
}


def _check_example(name):
    path = EXAMPLE_FIXTURES / f"{name}.json"
    (rep,) = run_verify([path])
    rec = ingest(path)
    pf = prodform_check(rec.units, rep["candidate"], rec.lvalues)
    ratio_ok = pf.ratio is not None and abs(pf.ratio - 1) <= 1e-8
    verdict_ok = rep["squareness"]["is_square"] is WORKED_EXAMPLES[name]
    p1_ok = rep["p1"]["status"] == "PASS" and rep["p1"]["index"] == rep["p1"]["target"]
    word = "square" if rep["squareness"]["is_square"] else "not a square"
    return ratio_ok and verdict_ok and p1_ok, f"{name.split('_', 1)[1]}: {word}"


def test_criterion_09_oracle_fixtures():
    results, missing = {}, {}
    for name in sorted(WORKED_EXAMPLES):
        if (EXAMPLE_FIXTURES / f"{name}.json").exists():
            results[name] = _check_example(name)
        else:
            note = EXAMPLE_FIXTURES / f"{name}.unavailable"
            missing[name] = json.loads(note.read_text())["unavailable"] if note.exists() else "fixture file missing"
    ok = all(r for r, _ in results.values())
    detail = "; ".join(d for _, d in results.values())
    if missing:
        acceptance_line(9, ok, f"SKIPPED for {', '.join(missing)} (oracle data unavailable); checked: {detail}")
        assert ok
        pytest.skip(f"oracle data unavailable: {missing}")
    acceptance_line(9, ok, f"5 oracle fixtures: verdicts as stated, P1 exact, product ratio within 1e-8 ({detail})")
    assert ok


# -- 10 --------------------------------------------------------------------------------------------


def test_criterion_10_bound_validation():
    results = []
    for m, d in ((1, 4), (2, 2), (2, 3)):
        base = record_to_json(random_record(m, 11, d))
        bound = e_lower_bound(d, m)
        for e, code in ((bound, EXIT_OK), (bound - 1, EXIT_INCONSISTENT)):
            if e < 0:
                continue
            doc = json.loads(json.dumps(base))
            doc["field_summary"]["e"] = e
            results.append(((m, d, e), _consistency_code(doc) == code))
    sext = record_to_json(random_record(3, 5, 2))
    fs = sext["field_summary"]
    ep = fs["e_prime"]
    for e, code in ((ep + 2, EXIT_OK), (ep + 1, EXIT_INCONSISTENT), (ep, EXIT_INCONSISTENT)):
        doc = json.loads(json.dumps(sext))
        doc["field_summary"]["e"] = e
        results.append((("sextic", e - ep), _consistency_code(doc) == code))
    ok = all(r for _, r in results)
    acceptance_line(10, ok, f"bounds e >= (d-1)m-2 and e-e' even, >= 2d-2: {sum(r for _, r in results)}/"
                            f"{len(results)} boundary cases rejected/accepted as required")
    assert ok, results


def _consistency_code(doc) -> int:
    """Exit code of ingestion restricted to schema and consistency (no P1 or L-value verdicts)."""
    try:
        record_from_json(doc)
    except IngestError as exc:
        return exc.code
    return EXIT_OK
