"""Brute-force oracles for small modules, independent of hom-space solving."""

import itertools

from unitalg import linalg
from unitalg.modules import submodule


def _key(F, rows):
    basis, _ = linalg.row_basis(F, [list(r) for r in rows]) if rows else ([], [])
    return tuple(tuple(r) for r in basis)


def submodules(M):
    """Every submodule of ``M`` as an RREF basis, via sums of cyclic submodules."""
    F = M.field
    cyclic = set()
    for v in M.elements():
        cyclic.add(_key(F, [linalg.matvec(F, m, list(v)) for m in M.action]))
    found = set(cyclic) | {()}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for c in cyclic:
                k = _key(F, list(a) + list(c))
                if k not in found:
                    new.add(k)
        found |= new
        frontier = new
    return sorted(found, key=len)


def brute_isomorphic(M, N):
    if M.dim != N.dim:
        return False
    F, d = M.field, M.dim
    if d == 0:
        return True
    for flat in itertools.product(F.elements(), repeat=d * d):
        h = [list(flat[r * d:(r + 1) * d]) for r in range(d)]
        if linalg.det(F, h) == F.zero:
            continue
        if all(linalg.matmul(F, h, a) == linalg.matmul(F, b, h) for a, b in zip(M.action, N.action)):
            return True
    return False


def brute_hom_count(M, N):
    F = M.field
    n = 0
    for flat in itertools.product(F.elements(), repeat=M.dim * N.dim):
        h = [list(flat[r * M.dim:(r + 1) * M.dim]) for r in range(N.dim)]
        if all(linalg.matmul(F, h, a) == linalg.matmul(F, b, h) for a, b in zip(M.action, N.action)):
            n += 1
    return n


def brute_is_summand(M, N):
    """Whether ``M = S + P`` with ``S`` and ``P`` submodules meeting in 0 and ``S`` isomorphic to ``N``."""
    F = M.field
    subs = submodules(M)
    for S in subs:
        if len(S) != N.dim or not brute_isomorphic(submodule(M, [list(r) for r in S]), N):
            continue
        for P in subs:
            if len(P) == M.dim - N.dim and linalg.rank(F, [list(r) for r in S + P]) == M.dim:
                return True
    return False
