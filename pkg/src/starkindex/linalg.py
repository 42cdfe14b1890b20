"""Exact integer and rational linear algebra.

Matrices are plain lists of rows holding Python ``int`` or ``Fraction``
entries; nothing here ever touches floating point.  The row-style Hermite
form is the canonical representation of lattices throughout the package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

Matrix = list[list[int]]


class SmithForm(NamedTuple):
    """``U @ A @ V == diag(invariants)`` with ``U``, ``V`` unimodular."""

    invariants: list[int]
    U: Matrix
    V: Matrix
    Vinv: Matrix


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy_matrix(A: Sequence[Sequence]) -> list[list]:
    return [list(row) for row in A]


def transpose(A: Sequence[Sequence]) -> list[list]:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def matpow(A: Sequence[Sequence], k: int) -> list[list]:
    result = identity(len(A))
    base = copy_matrix(A)
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det(A: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    M = [[Fraction(x) for x in row] for row in A]
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        p = M[c][c]
        result *= p
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / p
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return sign * result


def int_det(A: Sequence[Sequence[int]]) -> int:
    d = det(A)
    assert d.denominator == 1
    return int(d)


def rank(A: Sequence[Sequence]) -> int:
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse over the rationals; raises on singular input."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``A x = b`` exactly."""
    return matvec(inverse(A), [Fraction(x) for x in b])


def is_integral(v) -> bool:
    if isinstance(v, (list, tuple)):
        return all(is_integral(x) for x in v)
    return Fraction(v).denominator == 1


def to_int(v):
    if isinstance(v, (list, tuple)):
        return [to_int(x) for x in v]
    f = Fraction(v)
    if f.denominator != 1:
        raise ValueError(f"{v} is not an integer")
    return int(f)


def common_denominator(rows: Sequence[Sequence]) -> int:
    d = 1
    for row in rows:
        for x in row:
            q = Fraction(x).denominator
            d = d * q // _gcd(d, q)
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def hnf(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result lists a basis of the row lattice in echelon form: pivots are
    positive and entries above a pivot are reduced into ``[0, pivot)``.
    Zero rows are dropped, so two lattices are equal iff their forms are.
    """
    M = [list(map(int, r)) for r in rows if any(r)]
    if not M:
        return []
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        # gcd-combine column c over rows r.. into row r
        for i in range(r + 1, len(M)):
            if M[i][c] == 0:
                continue
            a, b = M[r][c], M[i][c]
            g, x, y = xgcd(a, b)
            ra, rb = M[r], M[i]
            M[r] = [x * p + y * q for p, q in zip(ra, rb)]
            M[i] = [(a // g) * q - (b // g) * p for p, q in zip(ra, rb)]
        if r < len(M) and M[r][c] != 0:
            if M[r][c] < 0:
                M[r] = [-x for x in M[r]]
            piv = M[r][c]
            for i in range(r):
                q = M[i][c] // piv
                if q:
                    M[i] = [p - q * s for p, s in zip(M[i], M[r])]
            r += 1
            if r == len(M):
                break
    return [row for row in M[:r] if any(row)]


def reduce_mod_hnf(v: Sequence[int], basis: Matrix) -> list[int]:
    """Reduce ``v`` against an HNF basis; zero iff ``v`` lies in the lattice
    (provided the leftover is checked on non-pivot columns too)."""
    v = list(v)
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def in_lattice(v: Sequence[int], basis: Matrix) -> bool:
    if not is_integral(list(v)):
        return False
    return not any(reduce_mod_hnf(to_int(list(v)), basis))


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Returns ``(invariants, U, V, Vinv)`` with ``U A V = D``; ``invariants``
    lists the first ``min(rows, cols)`` diagonal entries, nonnegative and
    forming a divisibility chain (zeros last).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col_dst += q * col_src; inverse: row_src of Vinv -= q * row_dst
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            piv = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                best = None
                for i in range(t, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < abs(D[best][t])):
                        best = i
                bj = None
                for j in range(t, n):
                    if D[t][j] and (bj is None or abs(D[t][j]) < abs(D[t][bj])):
                        bj = j
                if abs(D[t][bj]) < abs(D[best][t]):
                    swap_cols(t, bj)
                else:
                    swap_rows(t, best)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    invariants = [D[i][i] for i in range(min(m, n))]
    return SmithForm(invariants, U, V, Vinv)


def invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    return smith_normal_form(A).invariants


def kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Saturated basis (as rows) of ``{x in Z^n : A x = 0}``."""
    if not A:
        if ncols is None:
            raise ValueError("number of columns needed for an empty matrix")
        return identity(ncols)
    snf = smith_normal_form(A)
    n = len(A[0])
    r = sum(1 for d in snf.invariants if d)
    return [[snf.V[i][j] for i in range(n)] for j in range(r, n)]


def saturation(rows: Sequence[Sequence[int]]) -> Matrix:
    """Basis of ``(Q-span of rows) ∩ Z^n`` in Hermite form."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    snf = smith_normal_form(rows)
    r = sum(1 for d in snf.invariants if d)
    return hnf(snf.Vinv[:r])


def lattice_index(sub: Sequence[Sequence[int]], sup: Sequence[Sequence] | None = None) -> int:
    """Index of the lattice spanned by ``sub`` inside ``sup`` (default ``Z^n``).

    Both are given by generating rows in the same ambient coordinates; ``sup``
    may have rational entries.  Raises ``ValueError`` if ``sub`` does not have
    full rank in ``sup`` or is not contained in it.
    """
    sub = [list(r) for r in sub]
    if sup is None:
        if not sub:
            raise ValueError("rank-deficient sublattice")
        n = len(sub[0])
        coords = sub
    else:
        basis = rational_hnf(sup)
        n = len(basis)
        coords = [coordinates_in(v, basis) for v in sub]
    inv = invariant_factors(coords) if coords else []
    if len(inv) < n or any(d == 0 for d in inv):
        raise ValueError("rank-deficient sublattice")
    out = 1
    for d in inv:
        out *= d
    return out


def rational_hnf(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Hermite basis of a lattice with rational generators."""
    d = common_denominator(rows)
    H = hnf([[int(Fraction(x) * d) for x in r] for r in rows])
    return [[Fraction(x, d) for x in r] for r in H]


def coordinates_in(v: Sequence, basis: Sequence[Sequence]) -> list[int]:
    """Integer coordinates of ``v`` on an echelon ``basis``; raises if absent."""
    v = [Fraction(x) for x in v]
    coords = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] / Fraction(row[c])
        if q.denominator != 1:
            raise ValueError("vector not in lattice")
        coords.append(int(q))
        v = [a - q * Fraction(b) for a, b in zip(v, row)]
    if any(v):
        raise ValueError("vector not in lattice")
    return coords


def quotient_invariants(sup: Sequence[Sequence], sub: Sequence[Sequence]) -> list[int]:
    """Nontrivial invariant factors of ``sup / sub`` (0 marks a free summand).

    ``sub`` must lie inside ``sup``.
    """
    basis = rational_hnf(sup) if sup else []
    n = len(basis)
    if n == 0:
        return []
    coords = [coordinates_in(v, basis) for v in sub if any(v)]
    inv = invariant_factors(coords) if coords else []
    inv = inv + [0] * (n - len(inv))
    return sorted((d for d in inv if d != 1), key=lambda d: (d == 0, d))
