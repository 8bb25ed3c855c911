"""Exact Gaussian elimination over a :class:`~unitalg.field.FieldCtx`.

Matrices are lists of rows of raw field values.  Pivoting always takes the
first nonzero entry in the current column, scanning rows top to bottom, so
every result is deterministic.
"""

from __future__ import annotations

from .errors import InvalidInputError


def zeros(F, rows, cols):
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n):
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def transpose(M):
    return [list(r) for r in zip(*M)]


def matmul(F, A, B):
    if not A:
        return []
    if len(A[0]) != len(B):
        raise InvalidInputError("matrix size mismatch")
    Bt = transpose(B) if B else []
    if not Bt:
        return [[] for _ in A]
    return [[F.dot(row, col) for col in Bt] for row in A]


def matvec(F, A, v):
    return [F.dot(row, v) for row in A]


def vecmat(F, v, A):
    cols = len(A[0]) if A else 0
    return [F.dot(v, [A[i][j] for i in range(len(A))]) for j in range(cols)]


def matadd(F, A, B):
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(F, A, B):
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(F, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def vec_add(F, u, v):
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_scale(F, c, v):
    return [F.mul(c, a) for a in v]


def rref(F, M, ncols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)``; only the first ``ncols`` columns are pivot
    candidates (all columns by default).
    """
    R = [list(r) for r in M]
    if not R:
        return R, []
    width = len(R[0])
    if ncols is None:
        ncols = width
    zero = F.zero
    sub, mul = F.sub, F.mul
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c] != zero), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        if inv != F.one:
            R[r] = [mul(inv, x) for x in R[r]]
        pr = R[r]
        for i in range(len(R)):
            if i != r:
                f = R[i][c]
                if f != zero:
                    row = R[i]
                    R[i] = [sub(a, mul(f, b)) if b != zero else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(F, M) -> int:
    return len(rref(F, M)[1])


def row_basis(F, M):
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    R, piv = rref(F, M)
    return R[: len(piv)], piv


def det(F, M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise InvalidInputError("determinant of a non-square matrix")
    A = [list(r) for r in M]
    zero = F.zero
    sub, mul = F.sub, F.mul
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != zero), None)
        if piv is None:
            return zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.neg(d)
        pc = A[c][c]
        d = mul(d, pc)
        inv = F.inv(pc)
        prow = A[c]
        for i in range(c + 1, n):
            f = A[i][c]
            if f != zero:
                f = mul(f, inv)
                row = A[i]
                A[i] = [sub(a, mul(f, b)) if b != zero else a for a, b in zip(row, prow)]
    return d


def is_invertible(F, M) -> bool:
    return len(M) == (len(M[0]) if M else 0) and rank(F, M) == len(M)


def solve(F, A, b):
    """One solution of ``A x = b`` or ``None`` when the system is inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, piv = rref(F, aug, ncols=n)
    for row in R[len(piv):]:
        if row[n] != F.zero:
            return None
    x = [F.zero] * n
    for r, c in enumerate(piv):
        x[c] = R[r][n]
    return x


def nullspace(F, A, ncols=None):
    """Basis of ``{x : A x = 0}``, one vector per free column in index order."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(F, A)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for r, c in enumerate(piv):
            v[c] = F.neg(R[r][fcol])
        basis.append(v)
    return basis


def inverse(F, M):
    n = len(M)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(M)]
    R, piv = rref(F, aug, ncols=n)
    if len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def in_span(F, basis_rref, pivots, v) -> bool:
    """Membership of ``v`` in the row space of an RREF basis."""
    return all(x == F.zero for x in reduce_by(F, basis_rref, pivots, v))


def reduce_by(F, basis_rref, pivots, v):
    """Subtract RREF rows to clear ``v`` at every pivot column."""
    v = list(v)
    for row, c in zip(basis_rref, pivots):
        f = v[c]
        if f != F.zero:
            v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, row)]
    return v
