"""Exact linear algebra over QQ and QQ(zeta_8).

Matrices are lists of lists of field values (Fraction or Zeta8).  Everything
here is exact; the only non-obvious routine is `rank_lower_bound_mod_p`,
which gives a *certified lower bound* on the rational rank by reducing an
integer lift modulo a prime (rank can only drop under reduction).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Zeta8, is_zero

_CERT_PRIME = (1 << 31) - 1


def rref(rows):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if not is_zero(mat[i][c]):
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c]
        if inv != 1:
            mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r] + [row for row in mat[r:]], pivots


def rank(rows):
    if not rows:
        return 0
    _, pivots = rref(rows)
    return len(pivots)


def row_space_basis(rows):
    """Canonical (RREF) basis of the row space, zero rows dropped."""
    mat, pivots = rref(rows)
    return mat[: len(pivots)]


def same_row_space(rows_a, rows_b):
    return row_space_basis(rows_a) == row_space_basis(rows_b)


def in_row_space(vec, rows):
    if all(is_zero(x) for x in vec):
        return True
    return rank(list(rows) + [list(vec)]) == rank(rows)


def kernel_basis(rows, ncols):
    """Basis of the right kernel {x : rows . x = 0}, via RREF back-substitution."""
    mat, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    zero = Fraction(0)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution x of rows . x = rhs, or None if inconsistent."""
    if not rows:
        return None if any(not is_zero(b) for b in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    mat, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = mat[i][ncols]
    return x


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = ai[0] * b[0][j]
            for t in range(1, k):
                s = s + ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_inverse(a):
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    one = Fraction(1)
    zero = Fraction(0)
    aug = [list(a[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    mat, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in mat[:n]]


def det(a):
    """Determinant by fraction-free elimination (small matrices)."""
    n = len(a)
    mat = [list(r) for r in a]
    sign = 1
    result_one = Fraction(1)
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not is_zero(mat[i][c]):
                pr = i
                break
        if pr is None:
            return result_one * 0
        if pr != c:
            mat[c], mat[pr] = mat[pr], mat[c]
            sign = -sign
        for i in range(c + 1, n):
            f = mat[i][c] / mat[c][c]
            if not is_zero(f):
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    d = result_one * sign
    for i in range(n):
        d = d * mat[i][i]
    return d


def _int_rows(rows):
    """Clear denominators row by row; only valid for all-Fraction input."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def rank_lower_bound_mod_p(rows, p=_CERT_PRIME):
    """Certified lower bound for the rank of a matrix over QQ.

    Rank mod p never exceeds the rational rank, so the returned value is a
    true lower bound whatever p is.  Rows must be Fractions.
    """
    if not rows:
        return 0
    mat = [[x % p for x in row] for row in _int_rows(rows)]
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def rank_exact_via_certificate(rows, upper_bound=None):
    """Exact rank of a Fraction matrix, cheaply when a mod-p bound is sharp.

    If the mod-p lower bound meets the trivial upper bound min(nrows, ncols)
    (or a caller-supplied bound known to dominate the rank), that settles the
    rank; otherwise fall back to exact elimination.
    """
    if not rows:
        return 0
    lo = rank_lower_bound_mod_p(rows)
    hi = min(len(rows), len(rows[0]))
    if upper_bound is not None:
        hi = min(hi, upper_bound)
    if lo == hi:
        return lo
    return rank(rows)
