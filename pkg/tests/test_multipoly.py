import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_grid, random_invertible, random_poly
from unitalg import GF, CapExceededError, InvalidInputError, linalg
from unitalg.multipoly import (
    GridSpec,
    MultiPoly,
    cn_certify,
    cn_witness,
    evaluate,
    in_D,
    leading_form,
    linear_substitute,
    poly_from_json,
    poly_to_json,
    reduce_mod_grid,
)


def xs(F, n):
    return MultiPoly.variables(F, n)


def test_evaluate_examples():
    F2, F5 = GF(2), GF(5)
    X1, X2 = xs(F2, 2)
    assert evaluate(X1 * X2, [1, 1]) == 1
    assert evaluate(MultiPoly.zero(F2, 2), [1, 0]) == 0
    (X,) = xs(F5, 1)
    assert evaluate(X**3, [2]) == 3


def test_leading_form():
    F = GF(3)
    X1, X2 = xs(F, 2)
    assert leading_form(X1**2 + X2) == X1**2
    assert leading_form(X1 + X2) == X1 + X2
    assert leading_form(MultiPoly.zero(F, 2)).is_zero()


def test_reduce_examples():
    F = GF(5)
    (X,) = xs(F, 1)
    S = GridSpec(F, [[F(0), F(1), F(2)]])
    assert reduce_mod_grid(X**3, S) == 3 * X**2 + 3 * X
    small = 2 * X**2 + X
    assert reduce_mod_grid(small, S) == small
    h = X * (X - 1) * (X - 2)
    assert reduce_mod_grid(h, S).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_univariate_reduce_matches_sympy_rem(p, rng):
    F = GF(p)
    x = sympy.Symbol("x")
    for _ in range(30):
        g = random_poly(F, 1, rng, max_deg=9, max_terms=6)
        S = random_grid(F, 1, rng, max_size=p)
        h = sympy.Poly(1, x, modulus=p)
        for s in S.sets[0]:
            h = h * sympy.Poly(x - int(s), x, modulus=p)
        gs = sympy.Poly(sum(int(c) * x ** e[0] for e, c in g.terms.items()), x, modulus=p)
        r = gs.rem(h)
        expected = {(k,): int(c) % p for (k,), c in r.terms() if int(c) % p}
        assert reduce_mod_grid(g, S).terms == expected


def test_certify_examples():
    F2 = GF(2)
    X1, X2 = xs(F2, 2)
    S2 = GridSpec(F2, [[F2(0), F2(1)]] * 2)
    assert cn_certify(X1 * X2 + X1, (1, 1), S2).holds
    for p in (2, 3, 5):
        F = GF(p)
        (X,) = xs(F, 1)
        S = GridSpec(F, [F.enumerate()])
        cert = cn_certify(X**p - X, (p,), S)
        assert not cert.holds and cert.reasons
        assert cn_witness(X**p - X, S) is None
    one = MultiPoly.constant(F2, 2, 1)
    assert cn_certify(one, (0, 0), S2).holds


def test_witness_examples():
    F2, F3 = GF(2), GF(3)
    X1, X2 = xs(F2, 2)
    assert cn_witness(X1 * X2, GridSpec(F2, [F2.enumerate()] * 2)) == (1, 1)
    assert cn_witness(MultiPoly.zero(F2, 2), GridSpec(F2, [F2.enumerate()] * 2)) is None
    Y1, Y2 = xs(F3, 2)
    assert cn_witness(Y1 + Y2, GridSpec(F3, [F3.enumerate()] * 2)) == (0, 1)


def test_witness_cap():
    F = GF(5)
    S = GridSpec(F, [F.enumerate()] * 3)
    with pytest.raises(CapExceededError):
        cn_witness(MultiPoly.zero(F, 3), S, cap=100)


def test_substitution_examples():
    F3 = GF(3)
    X1, X2 = xs(F3, 2)
    g = X1 * X2
    assert linear_substitute(g, linalg.identity(F3, 2)) == g
    assert linear_substitute(X1, [[0, 1], [1, 0]]) == X2
    assert linear_substitute(g, [[1, 1], [0, 1]]) == X1**2 + X1 * X2


def test_in_D_examples():
    F2, F3 = GF(2), GF(3)
    X1, X2 = xs(F2, 2)
    assert in_D(X1 * X2, 2, 1)
    assert not in_D(X1**2, 2, 1)
    Y1, Y2 = xs(F3, 2)
    assert in_D(Y1**2 * Y2 + Y1**3, 3, 1)
    with pytest.raises(InvalidInputError):
        in_D(Y1, 2, 1)


def test_grid_rejects_duplicates():
    F = GF(3)
    with pytest.raises(InvalidInputError):
        GridSpec(F, [[F(1), F(1)]])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_grid_properties(p, rng):
    F = GF(p)
    for _ in range(40):
        n = rng.randint(1, 3)
        g = random_poly(F, n, rng)
        S = random_grid(F, n, rng)
        r = reduce_mod_grid(g, S)
        for i, s in enumerate(S.sets):
            assert r.degree_in(i) < len(s)
        for x in S.points():
            assert g.evaluate(x) == r.evaluate(x)
        lead = [e for e in g.terms if sum(e) == g.total_degree] if not g.is_zero() else []
        for d in lead:
            if cn_certify(g, d, S).holds:
                w = cn_witness(g, S)
                assert w is not None and g.evaluate(w) != 0


@pytest.mark.parametrize("p", [2, 3])
def test_substitution_functorial(p, rng):
    F = GF(p)
    for _ in range(25):
        n = rng.randint(1, 3)
        g = random_poly(F, n, rng, max_deg=3)
        B1 = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        B2 = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        lhs = linear_substitute(g, linalg.matmul(F, B1, B2))
        assert lhs == linear_substitute(linear_substitute(g, B2), B1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_in_D_gl_invariant(p, rng):
    F = GF(p)
    for _ in range(30):
        n = rng.randint(1, 3)
        g = random_poly(F, n, rng, max_deg=5)
        B = random_invertible(F, n, rng)
        h = linear_substitute(g, B)
        assert h.total_degree == g.total_degree
        for m in (1, 2):
            assert in_D(g, p, m) == in_D(h, p, m)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]))
def test_ring_homomorphism_to_values(s, p):
    import random

    r = random.Random(s)
    F = GF(p)
    n = r.randint(1, 3)
    g, h = random_poly(F, n, r), random_poly(F, n, r)
    for x in itertools.islice(itertools.product(range(p), repeat=n), 12):
        assert (g * h).evaluate(x) == g.evaluate(x) * h.evaluate(x)
        assert (g - h).evaluate(x) == g.evaluate(x) - h.evaluate(x)


def test_json_round_trip(rng):
    for F in (GF(3), GF(2, 2)):
        for _ in range(10):
            g = random_poly(F, 2, rng)
            assert poly_from_json(F, poly_to_json(g)) == g


def test_json_grlex_order():
    F = GF(5)
    X1, X2 = xs(F, 2)
    exps = [t["exp"] for t in poly_to_json(X1 + X2**2 + 1 + X1 * X2)["terms"]]
    assert exps == [[1, 1], [0, 2], [1, 0], [0, 0]]
