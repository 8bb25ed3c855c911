import pytest
import sympy

from unitalg import GF, QQ
from unitalg import linalg


def _rand_matrix(F, rng, r, c):
    return [[F.random(rng) for _ in range(c)] for _ in range(r)]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_det_against_sympy(p, rng):
    F = GF(p)
    for _ in range(40):
        n = rng.randint(1, 5)
        M = _rand_matrix(F, rng, n, n)
        S = sympy.Matrix(M)
        assert linalg.det(F, M) == int(S.det()) % p


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rank_against_det_minors(p, rng):
    # rank = largest size of a nonzero minor
    from itertools import combinations

    F = GF(p)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        M = _rand_matrix(F, rng, r, c)
        best = 0
        for k in range(1, min(r, c) + 1):
            for rows in combinations(range(r), k):
                for cols in combinations(range(c), k):
                    sub = sympy.Matrix([[M[i][j] for j in cols] for i in rows])
                    if int(sub.det()) % p:
                        best = k
        assert linalg.rank(F, M) == best


def test_rational_det_and_inverse(rng):
    from fractions import Fraction

    for _ in range(20):
        n = rng.randint(1, 4)
        M = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        d = linalg.det(QQ, M)
        assert d == sympy.Matrix(M).det()
        if d != 0:
            inv = linalg.inverse(QQ, M)
            assert linalg.matmul(QQ, M, inv) == linalg.identity(QQ, n)


def test_extension_inverse_and_solve(rng):
    F = GF(2, 3)
    for _ in range(30):
        n = rng.randint(1, 4)
        M = _rand_matrix(F, rng, n, n)
        if linalg.is_invertible(F, M):
            inv = linalg.inverse(F, M)
            assert linalg.matmul(F, inv, M) == linalg.identity(F, n)
            b = [F.random(rng) for _ in range(n)]
            x = linalg.solve(F, M, b)
            assert linalg.matvec(F, M, x) == b
        else:
            with pytest.raises(ZeroDivisionError):
                linalg.inverse(F, M)


def test_nullspace_is_kernel(rng):
    F = GF(3)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        M = _rand_matrix(F, rng, r, c)
        N = linalg.nullspace(F, M, c)
        assert len(N) == c - linalg.rank(F, M)
        for v in N:
            assert linalg.matvec(F, M, v) == [0] * r


def test_inconsistent_solve():
    F = GF(2)
    assert linalg.solve(F, [[1, 0], [1, 0]], [0, 1]) is None
