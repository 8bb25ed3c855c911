"""Seeded random instances shared by the test modules."""

from unitalg import linalg
from unitalg.multipoly import GridSpec, MultiPoly


def random_poly(F, n, rng, max_deg=4, max_terms=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms[exp] = F.random(rng)
    return MultiPoly(F, n, {e: F.elem(c) for e, c in terms.items()})


def random_grid(F, n, rng, max_size=4):
    elems = F.elements()
    sets = []
    for _ in range(n):
        k = rng.randint(1, min(max_size, len(elems)))
        sets.append([F.elem(a) for a in rng.sample(elems, k)])
    return GridSpec(F, sets)


def random_invertible(F, n, rng):
    while True:
        M = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        if linalg.is_invertible(F, M):
            return M
