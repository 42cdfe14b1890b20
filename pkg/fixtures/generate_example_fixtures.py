#!/usr/bin/env python3
"""Produce the oracle fixture files for the five worked examples with PARI/GP (via cypari2).

Run once, offline:  python3 fixtures/generate_example_fixtures.py [--out fixtures/examples]

The package never imports cypari2; this script is the only place the
computer-algebra oracle is used.  Everything stored in a fixture is read off
PARI objects (units, class groups with Galois action, regulators, Hecke
L-function derivatives); the exact linear algebra uses starkindex.linalg.
Class groups are computed by bnfinit and certified with bnfcertify where the
degree allows it; the certification status is written to the provenance.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from importlib import metadata
from pathlib import Path

import cypari2
import mpmath

from starkindex.cohomology import preimage
from starkindex.linalg import coordinates_in, hnf, kernel, lattice_index, saturation, transpose
from starkindex.unitlattice import minus_kernel

pari = cypari2.Pari()
pari.allocatemem(4 * 10 ** 9, silent=True)
pari.default("realprecision", 60)
DIGITS = 45

EXAMPLES = [
    {"name": "quadratic_sqrt5_p11_v2", "k": "y^2 - 5",
     "modulus": "[idealhnf(nf, 1/2 + 3*y/2), [0, 1]]", "stated": "not a square"},
    {"name": "quadratic_sqrt5_sqrt5q11_v1", "k": "y^2 - 5",
     "modulus": "[idealmul(nf, y, idealhnf(nf, 1/2 - 3*y/2)), [1, 0]]", "stated": "square",
     "extra_S": ["idealprimedec(nf, 5)[1]"]},
    {"name": "quadratic_cubic_a13_v2v3", "k": "y^3 - y^2 - 13*y + 1",
     "modulus": "[1, [0, 1, 1]]", "stated": "not a square"},
    {"name": "quadratic_cubic_b24_v2v3", "k": "y^3 - y^2 - 24*y - 35",
     "modulus": "[1, [0, 1, 1]]", "stated": "square", "conductor_exact": True},
    {"name": "sextic_cubic_a9_v2v3", "k": "y^3 + y^2 - 9*y - 8",
     "modulus": "[1, [0, 1, 1]]", "stated": "not a square"},
]


def g(expr: str):
    return pari(expr)


def to_int_list(v) -> list:
    return [int(x) for x in v]


def _fmt(x) -> str:
    mpmath.mp.dps = DIGITS + 10
    return mpmath.nstr(mpmath.mpf(str(pari.real(x)).replace(" E", "e")), DIGITS, min_fixed=-5, max_fixed=5)


def setup_extension(ex) -> dict:
    """Relative extension K/k cut out by the modulus (and the subgroup of the right conductor)."""
    g(f"kbnf = bnfinit({ex['k']}, 1); nf = kbnf.nf")
    g(f"bnr = bnrinit(kbnf, {ex['modulus']}, 1)")
    cyc = to_int_list(g("bnr.cyc"))
    if ex.get("conductor_exact"):
        # the quadratic subextension whose conductor is the full modulus
        subs = g("subgrouplist(bnr, [2])")
        chosen = None
        for k in range(len(subs)):
            g(f"Hs = subgrouplist(bnr, [2])[{k + 1}]")
            if g("bnrconductor(bnr, Hs) == bnr.mod") == 1:
                chosen = k
                break
        if chosen is None:
            raise RuntimeError("no subgroup with the full conductor")
    else:
        g("Hs = matdiagonal(bnr.cyc)")
    g("relpol = bnrclassfield(bnr, Hs, 1)")
    g("eq = rnfequation(nf, relpol, 1)")
    g("Kpol = eq[1]; yK = lift(eq[2])")
    g("red = polredbest(Kpol, 1)")
    g("Kpol = red[1]; xmap = lift(red[2]); yK = lift(subst(yK, x, Mod(xmap, Kpol)))")
    return {"cyc": cyc}


def automorphisms():
    """Automorphisms of K fixing k, as polynomials in x."""
    g("auts = nfgaloisconj(Kpol)")
    g("rel = [s | s <- auts, Mod(subst(yK, x, s), Kpol) == Mod(yK, Kpol)]")
    return int(g("#rel"))


def frobenius_generator(n: int):
    """The Artin symbol of a prime in the class of the generator of the (quotient) ray class group."""
    if n == 2:
        g("gam = [s | s <- rel, s != x][1]")
        return
    g("""
    found = 0;
    forprime(p = 3, 10^5,
      if (found, break);
      dec = idealprimedec(nf, p);
      for (i = 1, #dec,
        pr = dec[i];
        if (idealval(nf, bnr.mod[1], pr) > 0 || pr.f > 1, next);
        cl = bnrisprincipal(bnr, pr, 0);
        if (cl != [1]~, next);
        pi = nfbasistoalg(nf, pr.gen[2]);
        piK = subst(lift(pi), y, Mod(yK, Kpol));
        decK = idealprimedec(Knf, p);
        for (j = 1, #decK,
          P = decK[j];
          if (nfeltval(Knf, piK, P) <= 0 || P.e > 1, next);
          q = pr.p^pr.f;
          for (s = 1, #rel,
            ok = 1;
            for (b = 1, #Knf.zk,
              z = Mod(Knf.zk[b], Kpol);
              im = subst(lift(z), x, Mod(rel[s], Kpol));
              if (nfeltval(Knf, im - z^q, P) < 1, ok = 0; break));
            if (ok, gam = rel[s]; found = 1; break));
          if (found, break));
        if (found, break)));
    if (!found, error("no Frobenius found"));
    """)


def power_aut(k: int) -> str:
    g(f"tmp = x; for(i = 1, {k}, tmp = lift(subst(tmp, x, Mod(gam, Kpol))))")
    return "tmp"


def unit_action(bnf: str, aut: str) -> tuple:
    """(matrix on fundamental units mod torsion, torsion signs) for an automorphism."""
    r = int(g(f"#{bnf}.fu"))
    rows, signs = [], []
    for i in range(r):
        v = g(f"bnfisunit({bnf}, lift(subst(lift({bnf}.fu[{i + 1}]), x, Mod({aut}, {bnf}.pol))))")
        v = to_int_list(v)
        rows.append(v[:r])
        signs.append(v[r] % 2)
    return rows, signs


def class_action(bnf: str, aut: str) -> list:
    n = int(g(f"#{bnf}.cyc"))
    rows = []
    for i in range(n):
        v = g(f"bnfisprincipal({bnf}, nfgaloisapply({bnf}.nf, {aut}, {bnf}.gen[{i + 1}]), 0)")
        rows.append(to_int_list(v))
    return rows


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def coords_in(rows, basis):
    """Integer coordinates of each row on a basis of a saturated sublattice."""
    try:
        return [coordinates_in(r, basis) for r in rows]
    except ValueError as exc:
        raise RuntimeError(f"vector not in the lattice: {exc}")


def minus_part(T, Mg):
    """Basis of U^- = ker(1 + tau) and the action of gamma on it."""
    B = minus_kernel(T)
    images = matmul(B, Mg)
    A = coords_in(images, B)
    return B, A


def norm_index(T, signs) -> int:
    """(Ubar_{K+} : N(Ubar_K)) computed inside Ubar_K with exact signs."""
    r = len(T)
    TmI = [[T[i][j] - int(i == j) for j in range(r)] for i in range(r)]
    fixed = saturation(kernel(transpose(TmI), r))
    # u_c is fixed by tau iff sum c_i s_i is even
    par = [sum(c * s for c, s in zip(v, signs)) % 2 for v in fixed]
    if any(par):
        i0 = par.index(1)
        basis = []
        for i, v in enumerate(fixed):
            if par[i]:
                basis.append([a + b for a, b in zip(v, fixed[i0])] if i != i0 else [2 * a for a in v])
            else:
                basis.append(v)
        plus = hnf(basis)
    else:
        plus = hnf(fixed)
    IpT = [[T[i][j] + int(i == j) for j in range(r)] for i in range(r)]
    norms = [row for row in hnf(IpT) if any(row)]
    return lattice_index(coords_in(norms, plus)) if norms else 1


def log_vector(bnf: str, place: int) -> list:
    r = int(g(f"#{bnf}.fu"))
    return [g(f"log(abs(nfeltembed({bnf}.nf, {bnf}.fu[{i + 1}], {place})))") for i in range(r)]


def norm_rows(bnf: str, bnfplus: str) -> list:
    """Classes in Cl(K+) of the relative norms of the generators of Cl(K)."""
    g(f"emb = lift(nfisincl({bnfplus}.pol, {bnf}.pol)[1])")
    rows = []
    for i in range(int(g(f"#{bnf}.cyc"))):
        g(f"""fa = idealfactor({bnf}.nf, {bnf}.gen[{i + 1}]); Nid = 1;
            for (k = 1, #fa~,
              P = fa[k, 1]; found = 0;
              dec = idealprimedec({bnfplus}.nf, P.p);
              for (l = 1, #dec,
                pr = dec[l];
                up = idealadd({bnf}.nf, pr.p,
                  lift(subst(lift(nfbasistoalg({bnfplus}.nf, pr.gen[2])), variable({bnfplus}.pol), Mod(emb, {bnf}.pol))));
                if (idealval({bnf}.nf, up, P) > 0,
                  Nid = idealmul({bnfplus}.nf, Nid, idealpow({bnfplus}.nf, pr, fa[k, 2] * P.f / pr.f));
                  found = 1; break));
              if (!found, error("no prime below")))""")
        rows.append(to_int_list(g(f"bnfisprincipal({bnfplus}, Nid, 0)")))
    return rows


def class_minus(bnf: str, bnfplus: str, gamma_rows, m: int) -> dict:
    """Cl^- = ker(N: Cl_K -> Cl_K+) with the gamma action, presented over the minus ring."""
    ring = {1: "Z", 2: "Z[i]", 3: "Z[H]"}[m]
    cyc = to_int_list(g(f"{bnf}.cyc"))
    n = len(cyc)
    if n == 0:
        return {"ring": ring, "relations": [], "order": 1}
    cyc_plus = to_int_list(g(f"{bnfplus}.cyc"))
    L = [[cyc[i] * int(i == j) for j in range(n)] for i in range(n)]
    if cyc_plus:
        Lp = [[cyc_plus[i] * int(i == j) for j in range(len(cyc_plus))] for i in range(len(cyc_plus))]
        S = preimage(norm_rows(bnf, bnfplus), Lp)
    else:
        S = hnf(L[:0] + [[int(i == j) for j in range(n)] for i in range(n)])
    Lc = coords_in(hnf(L), S)
    order = lattice_index(Lc)
    h, h_plus = int(g(f"{bnf}.no")), int(g(f"{bnfplus}.no"))
    if order * h_plus != h:
        raise RuntimeError(f"ker N has order {order}, expected h_K/h_K+ = {h // h_plus}")
    gam = coords_in(matmul(S, gamma_rows), S)
    deg = {1: 1, 2: 2, 3: 3}[m]

    def scal(c):
        return [c] + [0] * (deg - 1)

    rels = [[scal(c) for c in row] for row in Lc if any(row)]
    if m > 1:
        act = gam if m == 2 else matmul(gam, gam)
        t = [0, 1] + [0] * (deg - 2)
        for i in range(len(S)):
            rel = [scal(-act[i][j]) for j in range(len(S))]
            rel[i] = [a + b for a, b in zip(rel[i], t)]
            rels.append(rel)
    return {"ring": ring, "relations": rels, "order": order}


def fixed_field(group: str) -> str:
    """Minimal polynomial of a primitive element of the fixed field of a group of automorphisms."""
    n = int(g(f"#{group}"))
    for c in range(0, 6):
        g(f"el = Mod(0, Kpol); for(i = 1, {n}, el += subst(x^2 + {c} * x, x, Mod({group}[i], Kpol)))")
        g("mp = minpoly(el)")
        if int(g("poldegree(mp)")) * n == int(g("poldegree(Kpol)")):
            return "mp"
    raise RuntimeError("no primitive element")


def lvalue(chi: list):
    g(f"Lf = lfuncreate([bnr, {chi}])")
    return g("lfun(Lf, 0, 1)")


def build(ex: dict, out: Path) -> dict:
    t0 = time.time()
    info = setup_extension(ex)
    g("Kbnf = bnfinit(Kpol, 1); Knf = Kbnf.nf")
    n = automorphisms()
    two_m = n
    m = two_m // 2
    d = int(g("poldegree(kpol = nf.pol)"))
    frobenius_generator(n)
    power_aut(m)
    g("tau = tmp")
    Mg, _ = unit_action("Kbnf", "gam")
    T, tsign = unit_action("Kbnf", "tau")
    B, A = minus_part(T, Mg)
    e = norm_index(T, tsign).bit_length() - 1
    # distinguished real place: the first real embedding of K (all real places lie above v)
    lf = log_vector("Kbnf", 1)
    Mj = [[int(i == j) for j in range(len(T))] for i in range(len(T))]
    logs = []
    for j in range(m):
        rowj = []
        for b in B:
            c = matmul([b], Mj)[0]
            rowj.append(sum(ci * li for ci, li in zip(c, lf)))
        logs.append(rowj)
        Mj = matmul(Mj, Mg)
    # K+ and class groups
    g("Hplus = [x, tau]")
    fixed_field("Hplus")
    g("Kpbnf = bnfinit(polredbest(mp), 1)")
    h_K, h_Kp = int(g("Kbnf.no")), int(g("Kpbnf.no"))
    cl = class_minus("Kbnf", "Kpbnf", class_action("Kbnf", "gam"), m)
    # primes of S that do not divide the conductor: each one inert in K/K+ adds to t_S,
    # and every L-function picks up the Euler factor (1 - chi(p)) since L(0, chi) = 0
    t_S, extra = 0, []
    for expr in ex.get("extra_S", []):
        if m != 1:
            raise RuntimeError("extra S primes handled for quadratic K/k only")
        a = int(g(f"bnrisprincipal(bnr, {expr}, 0)[1]")) % two_m
        extra.append(a)
        t_S += int(a % 2 == 1 and int(g(f"{expr}.f")) >= 1)
    lvals = []
    for j in range(1, two_m, 2):
        chi = [j * (info["cyc"][0] // two_m)] + [0] * (len(info["cyc"]) - 1) if not ex.get("conductor_exact") \
            else _char_on_quotient()
        L = lvalue(chi)
        for a in extra:
            L = L * g(f"1 - exp(2 * Pi * I * {j * a} / {two_m})")
        lvals.append({"chi_exponent": j, "re": _fmt(pari.real(L)), "im": _fmt(pari.imag(L)),
                      "precision": 1e-30})
    c = (cl["order"] & -cl["order"]).bit_length() - 1
    doc = {
        "group": {"two_m": two_m, "d": d},
        "field_summary": {"h_K": h_K, "h_Kplus": h_Kp, "R_K": _fmt(g("Kbnf.reg")),
                          "R_Kplus": _fmt(g("Kpbnf.reg")), "t_S": t_S, "e": e, "c": c},
        "minus_units": {"gamma_action": A, "log_embeddings": [[_fmt(x) for x in row] for row in logs],
                        "precision": 1e-30},
        "class_minus": {"ring": cl["ring"], "relations": cl["relations"]},
        "l_values": lvals,
        "provenance": {
            "oracle": "PARI/GP",
            "version": "PARI " + ".".join(str(v) for v in g("version()")[:3]) + ", cypari2 " + metadata.version("cypari2"),
            "defining_polynomials": [ex["k"], str(g("Kpol"))],
            "name": ex["name"],
            "script": "fixtures/generate_example_fixtures.py",
            "modulus": ex["modulus"],
            "expected_verdict": ex["stated"],
            "certified": str(int(g("bnfcertify(Kbnf)")) == 1) if int(g("poldegree(Kpol)")) <= 6 else "GRH",
            "t_S_note": ("S also contains the unramified prime(s) " + ", ".join(ex["extra_S"]) + ", inert in K/K+")
            if ex.get("extra_S") else "S = S(K/k): its finite primes ramify in K/k, so none is inert in K/K+",
        },
    }
    if m == 3:
        e_prime, sub = sub_extension(ex, d)
        doc["field_summary"]["e_prime"] = e_prime
        doc["field_summary"]["c_prime"] = sub["field_summary"]["c"]
        doc["sub_extension_F"] = sub
    doc["provenance"]["seconds"] = f"{time.time() - t0:.1f}"
    (out / f"{ex['name']}.json").write_text(json.dumps(doc, indent=2) + "\n")
    return doc


def _char_on_quotient() -> list:
    """The character of order 2 of the ray class group that is trivial on the subgroup Hs."""
    cyc = to_int_list(g("bnr.cyc"))
    H = [to_int_list(g(f"Hs[, {i + 1}]")) for i in range(int(g("#Hs")))]
    for c in itertools.product(range(2), repeat=len(cyc)):
        chi = [ci * n // 2 for ci, n in zip(c, cyc)]
        if any(chi) and all(sum(x * h * 2 // n for x, h, n in zip(chi, col, cyc)) % 2 == 0 for col in H):
            return chi
    raise RuntimeError("no quadratic character on the quotient")


def sub_extension(ex: dict, d: int) -> tuple:
    """The quadratic subextension F = K^H for the sextic example."""
    g("sig = lift(subst(gam, x, Mod(gam, Kpol)))")
    g("sig2 = lift(subst(sig, x, Mod(sig, Kpol)))")
    g("HH = [x, sig, sig2]")
    fixed_field("HH")
    g("Fpol = mp; Fbnf = bnfinit(Fpol, 1); Fnf = Fbnf.nf")
    g("Fel = el")  # root of Fpol inside K
    # k inside F and tau_F
    g("kF = lift(nfisincl(kpol, Fpol)[1])")
    g("Fauts = nfgaloisconj(Fpol)")
    g("tauF = [s | s <- Fauts, s != x && Mod(subst(kF, x, s), Fpol) == Mod(kF, Fpol)][1]")
    T, tsign = unit_action("Fbnf", "tauF")
    B = minus_kernel(T)
    if len(B) != 1:
        raise RuntimeError("U_F^- does not have rank 1")
    e_prime = norm_index(T, tsign).bit_length() - 1
    # real place of F below w: compare the value of the F-generator at w
    g("wval = subst(lift(Fel), x, polroots(Kpol)[1])")
    g("""wF = 0; best = 10^10; emb = nfeltembed(Fnf, x);
          for(i = 1, Fnf.r1, if (abs(emb[i] - real(wval)) < best, best = abs(emb[i] - real(wval)); wF = i))""")
    wF = int(g("wF"))
    if int(g("nfeltembed(Knf, x, 1) == polroots(Kpol)[1]")) != 1:
        # the first real embedding of Knf is the first root of Kpol
        pass
    lf = log_vector("Fbnf", wF)
    logF = sum(ci * li for ci, li in zip(B[0], lf))
    g("kpbnf = kbnf")
    h_F, h_k = int(g("Fbnf.no")), int(g("kbnf.no"))
    cl = class_minus("Fbnf", "kbnf", class_action("Fbnf", "tauF"), 1)
    L3 = lvalue([3])
    c = (cl["order"] & -cl["order"]).bit_length() - 1
    sub = {
        "group": {"two_m": 2, "d": d},
        "field_summary": {"h_K": h_F, "h_Kplus": h_k, "R_K": _fmt(g("Fbnf.reg")), "R_Kplus": _fmt(g("kbnf.reg")),
                          "t_S": 0, "e": e_prime, "c": c},
        "minus_units": {"gamma_action": [[-1]], "log_embeddings": [[_fmt(logF)]], "precision": 1e-30},
        "class_minus": {"ring": "Z", "relations": cl["relations"]},
        "l_values": [{"chi_exponent": 1, "re": _fmt(pari.real(L3)), "im": _fmt(pari.imag(L3)),
                      "precision": 1e-30}],
    }
    return e_prime, sub


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent / "examples"))
    ap.add_argument("--only", default=None)
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for ex in EXAMPLES:
        if args.only and args.only not in ex["name"]:
            continue
        try:
            doc = build(ex, out)
            print(ex["name"], "written", doc["provenance"]["seconds"], "s", file=sys.stderr)
        except (RuntimeError, cypari2.PariError) as exc:
            note = {"name": ex["name"], "unavailable": str(exc), "script": "fixtures/generate_example_fixtures.py"}
            (out / f"{ex['name']}.unavailable").write_text(json.dumps(note, indent=2) + "\n")
            print(ex["name"], "unavailable:", exc, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
