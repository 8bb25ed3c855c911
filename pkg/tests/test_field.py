from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from unitalg import GF, QQ, InvalidInputError, make_field
from unitalg.field import ExtensionField, find_irreducible, is_irreducible, is_prime, prime_factors

FINITE = [GF(2), GF(3), GF(5), GF(7), GF(2, 2), GF(2, 3), GF(3, 2), GF(2, 4), GF(5, 2)]


def test_descriptors():
    F5 = make_field({"kind": "prime", "p": 5})
    assert F5.cardinality == 5
    F4 = make_field({"kind": "ext", "p": 2, "modulus": [1, 1, 1]})
    assert F4.cardinality == 4
    with pytest.raises(InvalidInputError):
        make_field({"kind": "ext", "p": 2, "modulus": [1, 0, 1]})
    with pytest.raises(InvalidInputError):
        make_field({"kind": "prime", "p": 6})
    assert make_field({"kind": "rational"}) == QQ


def test_small_examples():
    assert GF(5)(2).inv() == 3
    F4 = GF(2, 2)
    t = F4.elem(F4.generator())
    assert t * t == t + 1
    assert QQ(Fraction(1, 3)) + QQ(Fraction(1, 6)) == QQ(Fraction(1, 2))


def test_enumeration_order():
    assert GF(3).elements() == [0, 1, 2]
    F4 = GF(2, 2)
    assert [str(a) for a in F4.enumerate()] == ["0", "1", "t", "t+1"]
    with pytest.raises(InvalidInputError):
        QQ.elements()


def test_frobenius_examples():
    F4 = GF(2, 2)
    t = F4.elem(F4.generator())
    assert t.frobenius(2) == t + 1
    assert F4(1).frobenius(4) == 1
    assert F4(0).frobenius(2) == 0


@pytest.mark.parametrize("F", FINITE, ids=repr)
def test_frobenius_is_additive_automorphism(F):
    p = F.characteristic
    image = {F.frobenius(a, p) for a in F.elements()}
    assert len(image) == F.cardinality
    for a in F.elements()[:16]:
        for b in F.elements()[:16]:
            assert F.frobenius(F.add(a, b), p) == F.add(F.frobenius(a, p), F.frobenius(b, p))


@pytest.mark.parametrize("F", FINITE, ids=repr)
def test_group_axioms_exhaustive(F):
    q = F.cardinality
    for a in F.elements():
        assert F.add(a, F.neg(a)) == F.zero
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one
            assert F.pow(a, q - 1) == F.one
        assert F.decode(F.encode(a)) == a


def _sympy_mul(F, a, b):
    # independent route: multiply coefficient lists with sympy and reduce mod f
    x = sympy.Symbol("x")
    pa = sympy.Poly(list(reversed(F.coords(a))), x, modulus=F.p)
    pb = sympy.Poly(list(reversed(F.coords(b))), x, modulus=F.p)
    f = sympy.Poly(list(reversed(F.modulus)), x, modulus=F.p)
    r = (pa * pb).rem(f)
    cs = [int(c) % F.p for c in reversed(r.all_coeffs())]
    return F.from_coords(cs + [0] * (F.degree - len(cs)))


@pytest.mark.parametrize("F", [GF(2, 3), GF(3, 2), GF(2, 4), GF(5, 2)], ids=repr)
def test_extension_mul_matches_sympy(F, rng):
    for _ in range(60):
        a, b = F.random(rng), F.random(rng)
        assert F.mul(a, b) == _sympy_mul(F, a, b)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_find_irreducible_against_sympy(p, e):
    f = find_irreducible(p, e)
    assert len(f) == e + 1 and f[-1] == 1
    x = sympy.Symbol("x")
    assert sympy.Poly(list(reversed(f)), x, modulus=p).is_irreducible


def _count_irreducible(p, e):
    # Gauss necklace formula, via the Moebius function
    return sum(sympy.mobius(d) * p ** (e // d) for d in sympy.divisors(e)) // e


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducible_count(p, e):
    import itertools

    n = sum(
        1
        for low in itertools.product(range(p), repeat=e)
        if is_irreducible(list(low) + [1], p)
    )
    assert n == _count_irreducible(p, e)


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == list(sympy.primerange(0, 30))
    assert prime_factors(360) == [2, 3, 5]


def test_rationals():
    a = QQ(Fraction(3, 4))
    assert QQ.encode(a.raw) == "3/4"
    assert QQ.decode("3/4") == Fraction(3, 4)
    assert QQ.characteristic == 0 and not QQ.is_finite
    with pytest.raises(ZeroDivisionError):
        QQ(0).inv()


def test_field_mismatch():
    with pytest.raises(InvalidInputError):
        GF(2)(1) + GF(3)(1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FINITE), st.data())
def test_ring_laws(F, data):
    pick = st.integers(0, F.cardinality - 1).map(lambda k: F.elements()[k])
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, b) == F.add(b, a)


def test_extension_generator_degree_one():
    F = ExtensionField(3, [1, 1])
    assert F.cardinality == 3
    assert F.elem(F.generator()) == F(-1)
