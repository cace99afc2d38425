"""Exact integer matrix algebra: Smith normal form, lattices, solving.

Matrices are plain lists of rows of arbitrary-precision ints.  Everything
here is exact; there is no floating point anywhere.  The Smith normal form
uses smallest-absolute-value pivoting, which keeps intermediate entries
small at the scale this engine works at (ranks up to ~128).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Matrix = list  # list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def mat_copy(M: Matrix) -> Matrix:
    return [row[:] for row in M]


def mat_shape(M: Matrix, ncols: int | None = None) -> tuple[int, int]:
    m = len(M)
    if m:
        n = len(M[0])
        if any(len(r) != n for r in M):
            raise ValueError("ragged matrix")
    else:
        n = 0 if ncols is None else ncols
    return m, n


def mat_mul(A: Matrix, B: Matrix, *, inner: int | None = None) -> Matrix:
    ma, na = mat_shape(A, inner)
    mb, nb = mat_shape(B)
    if na != mb:
        if not A and inner is None:
            na = mb
        else:
            raise ValueError(f"shape mismatch {ma}x{na} @ {mb}x{nb}")
    out = []
    for i in range(ma):
        Ai = A[i]
        row = [0] * nb
        for k in range(na):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(nb):
                    if Bk[j]:
                        row[j] += a * Bk[j]
        out.append(row)
    return out


def mat_vec(A: Matrix, v: list) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def mat_transpose(M: Matrix, ncols: int | None = None) -> Matrix:
    m, n = mat_shape(M, ncols)
    return [[M[i][j] for i in range(m)] for j in range(n)]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def smith_normal_form(M: Matrix, ncols: int | None = None):
    """Return (U, D, V) with U*M*V = D.

    D is diagonal with non-negative entries satisfying d1 | d2 | ...;
    U and V are unimodular (determinant +-1).  Pivots are chosen by
    smallest absolute value over the remaining submatrix.
    """
    m, n = mat_shape(M, ncols)
    D = mat_copy(M)
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row_dst += c * row_src
        Ds, Dd = D[src], D[dst]
        for j in range(n):
            Dd[j] += c * Ds[j]
        Us, Ud = U[src], U[dst]
        for j in range(m):
            Ud[j] += c * Us[j]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # locate the smallest nonzero entry in the trailing submatrix
        piv = None
        best = None
        for i in range(t, m):
            Di = D[i]
            for j in range(t, n):
                x = Di[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])

        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        # remainder strictly smaller: promote it to pivot
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t right of the pivot
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # ensure the pivot divides the whole remaining block
            p = D[t][t]
            culprit = None
            for i in range(t + 1, m):
                Di = D[i]
                for j in range(t + 1, n):
                    if Di[j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(culprit, t, 1)
        if D[t][t] < 0:
            negate_row(t)
        t += 1

    return U, D, V


def diagonal_of(D: Matrix, ncols: int | None = None) -> list:
    m, n = mat_shape(D, ncols)
    return [D[i][i] for i in range(min(m, n))]


class SNFSolver:
    """Reusable exact solver for M x = b built on one Smith decomposition."""

    def __init__(self, M: Matrix, ncols: int | None = None):
        self.m, self.n = mat_shape(M, ncols)
        self.M = mat_copy(M)
        self.U, self.D, self.V = smith_normal_form(M, ncols)
        diag = diagonal_of(self.D, self.n)
        self.rank = sum(1 for d in diag if d)
        self.diag = diag

    def solve(self, b: list) -> list | None:
        """One integral solution of M x = b (free SNF coordinates zero), or None."""
        y = mat_vec(self.U, b)
        x_coords = [0] * self.n
        for i in range(self.m):
            if i < self.rank:
                d = self.diag[i]
                if y[i] % d:
                    return None
                x_coords[i] = y[i] // d
            elif y[i]:
                return None
        return mat_vec(self.V, x_coords)

    def kernel_basis(self) -> Matrix:
        """Basis (as rows) of the saturated lattice {x : M x = 0}."""
        return [[self.V[i][j] for i in range(self.n)] for j in range(self.rank, self.n)]


def integer_kernel(M: Matrix, ncols: int | None = None) -> Matrix:
    return SNFSolver(M, ncols).kernel_basis()


def inverse_unimodular(M: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    m, n = mat_shape(M)
    if m != n:
        raise ValueError("inverse of non-square matrix")
    s = SNFSolver(M)
    if any(abs(d) != 1 for d in s.diag) or s.rank != n:
        raise ValueError("matrix is not unimodular")
    # M^-1 = V D^-1 U with D = diag(+-1)
    Dinv = [[(1 if s.diag[i] > 0 else -1) if i == j else 0 for j in range(n)] for i in range(n)]
    return mat_mul(mat_mul(s.V, Dinv), s.U)


def det(M: Matrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("determinant of non-square matrix")
    a = mat_copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Lattices (subgroups of Z^n given by spanning rows)


def hermite_row_basis(rows: Matrix, ncols: int) -> Matrix:
    """Canonical row-style Hermite basis of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    Two spanning sets give the same lattice iff their bases are equal.
    """
    work = [row[:] for row in rows if any(row)]
    basis: list[list[int]] = []  # kept in echelon order
    for v in work:
        v = v[:]
        while True:
            j = next((c for c in range(ncols) if v[c]), None)
            if j is None:
                break
            placed = False
            for idx, b in enumerate(basis):
                pj = next(c for c in range(ncols) if b[c])
                if pj < j:
                    continue
                if pj > j:
                    basis.insert(idx, v)
                    placed = True
                    break
                # same pivot column: combine
                a, bb = b[j], v[j]
                if bb % a == 0:
                    q = bb // a
                    v = [x - q * y for x, y in zip(v, b)]
                else:
                    g, s, t = _xgcd(a, bb)
                    new_b = [s * x + t * y for x, y in zip(b, v)]
                    new_v = [(-(bb // g)) * x + (a // g) * y for x, y in zip(b, v)]
                    basis[idx] = new_b
                    v = new_v
                break
            else:
                basis.append(v)
                placed = True
            if placed:
                break
    # normalize: positive pivots, reduce above
    for i, b in enumerate(basis):
        j = next(c for c in range(ncols) if b[c])
        if b[j] < 0:
            basis[i] = [-x for x in b]
    for i in range(len(basis) - 1, -1, -1):
        j = next(c for c in range(ncols) if basis[i][c])
        p = basis[i][j]
        for k in range(i):
            q = basis[k][j] // p
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return basis


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lattice_contains(basis: Matrix, v: list, ncols: int) -> bool:
    """Membership of v in the lattice with Hermite basis ``basis``."""
    v = v[:]
    for b in basis:
        j = next(c for c in range(ncols) if b[c])
        if v[j]:
            if v[j] % b[j]:
                return False
            q = v[j] // b[j]
            v = [x - q * y for x, y in zip(v, b)]
    return not any(v)


def lattice_equal(rows_a: Matrix, rows_b: Matrix, ncols: int) -> bool:
    return hermite_row_basis(rows_a, ncols) == hermite_row_basis(rows_b, ncols)


# ---------------------------------------------------------------------------
# Fractions support


def clear_denominators(M, ncols: int | None = None) -> tuple[Matrix, int]:
    """Scale a Fraction/int matrix to an integer matrix; returns (matrix, scale)."""
    m, n = mat_shape(M, ncols)
    mult = 1
    for row in M:
        for x in row:
            mult = lcm(mult, Fraction(x).denominator)
    out = [[int(Fraction(x) * mult) for x in row] for row in M]
    return out, mult
