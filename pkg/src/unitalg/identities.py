"""Exact audits of determinant and character-sum identities.

Each function computes both sides of an identity independently and reports
them; the identities are theorems, so ``equal`` / ``holds`` is expected to
be true and is returned for audit rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from . import linalg
from .errors import InvalidInputError, check_cap
from .field import FieldCtx, FieldElem, is_prime
from .multipoly import MultiPoly


@dataclass(frozen=True)
class CauchyDavenportReport:
    sumset: tuple
    size: int
    bound: int
    holds: bool


def _residue_set(p, xs, name):
    xs = list(xs)
    if not xs:
        raise InvalidInputError(f"{name} must be nonempty")
    if any(not isinstance(x, int) or not 0 <= x < p for x in xs):
        raise InvalidInputError(f"{name} must consist of residues in [0, {p})")
    if len(set(xs)) != len(xs):
        raise InvalidInputError(f"{name} has repeated residues")
    return xs


def cauchy_davenport_check(p: int, A, B) -> CauchyDavenportReport:
    """``#(A + B) >= min(#A + #B - 1, p)`` for nonempty A, B in Z/pZ."""
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    A = _residue_set(p, A, "A")
    B = _residue_set(p, B, "B")
    sumset = tuple(sorted({(a + b) % p for a in A for b in B}))
    bound = min(len(A) + len(B) - 1, p)
    return CauchyDavenportReport(sumset, len(sumset), bound, len(sumset) >= bound)


@dataclass(frozen=True)
class IdentityReport:
    lhs: FieldElem
    rhs: FieldElem
    equal: bool


def glynn_exponent_power(p: int, e: int):
    """``m`` with ``e == p**m - 1``, or ``None``."""
    if e < 0:
        return None
    m, q = 0, 1
    while q - 1 < e:
        q *= p
        m += 1
    return m if q - 1 == e else None


def glynn_coefficient(F: FieldCtx, A, e: int | None = None, cap=None) -> IdentityReport:
    """Coefficient of ``X_1^e ... X_n^e`` in ``prod_j (sum_i a_ij X_i)^e``
    (``lhs``) against ``det(A)^e`` (``rhs``).

    ``e`` defaults to ``p - 1`` and must have the form ``p**m - 1``.
    """
    p = F.characteristic
    if p == 0:
        raise InvalidInputError("Glynn's formula needs positive characteristic")
    if e is None:
        e = p - 1
    if glynn_exponent_power(p, e) is None:
        raise InvalidInputError(f"exponent {e} is not of the form {p}^m - 1")
    A = [[F.convert(x) for x in row] for row in A]
    n = len(A)
    if any(len(r) != n for r in A):
        raise InvalidInputError("matrix must be square")
    # the product is homogeneous of degree n*e: bound its number of monomials
    check_cap(comb(n * e + n - 1, n - 1) if n else 1, cap, "Glynn expansion")
    prod = MultiPoly.constant(F, n, 1)
    for j in range(n):
        form = MultiPoly(F, n, {tuple(int(k == i) for k in range(n)): A[i][j] for i in range(n)})
        prod = prod * form**e
    coeff = prod.terms.get((e,) * n, F.zero)
    rhs = F.pow(linalg.det(F, A), e) if n else F.one
    return IdentityReport(F.elem(coeff), F.elem(rhs), coeff == rhs)


def _power_sum_one_var(k: FieldCtx, d: int):
    # 0**0 counts as 1
    return k.sum(k.one if d == 0 else k.pow(x, d) for x in k.elements())


def monomial_character_sum(k: FieldCtx, d) -> FieldElem:
    """``sum over x in k^n of prod x_i^{d_i}`` as a product of one-variable sums."""
    if not k.is_finite:
        raise InvalidInputError("character sums need a finite field")
    acc = k.one
    for di in d:
        if di < 0:
            raise InvalidInputError("exponents must be non-negative")
        acc = k.mul(acc, _power_sum_one_var(k, di))
    return k.elem(acc)


def monomial_character_sum_closed_form(k: FieldCtx, d) -> FieldElem:
    """``(-1)^n`` if every ``d_i`` is a positive multiple of ``#k - 1``, else 0."""
    q1 = k.cardinality - 1
    if all(di > 0 and di % q1 == 0 for di in d):
        return k.elem(k.from_int((-1) ** len(d)))
    return k.elem(k.zero)


def power_sum_subgroup(F: FieldCtx, B, coeffs: str = "prime", cap=None) -> IdentityReport:
    """``sum over y in H of prod_j y_j^(s-1)`` against ``(-1)^n det(B)^(s-1)``.

    ``H`` is the span of the rows of ``B`` over the prime field
    (``coeffs="prime"``, ``s = p``) or over the whole finite field ``F``
    (``coeffs="subfield"``, ``s = #F``).  The sum is enumerated directly.
    """
    p = F.characteristic
    if p == 0:
        raise InvalidInputError("power sums need positive characteristic")
    B = [[F.convert(x) for x in row] for row in B]
    n = len(B)
    if any(len(r) != n for r in B):
        raise InvalidInputError("B must be n vectors of length n")
    d = linalg.det(F, B) if n else F.one
    if d == F.zero:
        raise InvalidInputError("B is not a basis")
    if coeffs == "prime":
        values = [F.from_int(c) for c in range(p)]
    elif coeffs == "subfield":
        values = F.elements()
    else:
        raise InvalidInputError(f"unknown coefficient domain {coeffs!r}")
    s = len(values)
    check_cap(s**n, cap, "power-sum enumeration")
    lhs = F.zero
    for cs in itertools.product(values, repeat=n):
        y = [F.zero] * n
        for c, b in zip(cs, B):
            if c != F.zero:
                y = [F.add(a, F.mul(c, v)) for a, v in zip(y, b)]
        t = F.one
        for yj in y:
            t = F.mul(t, F.pow(yj, s - 1))
            if t == F.zero:
                break
        lhs = F.add(lhs, t)
    rhs = F.mul(F.from_int((-1) ** n), F.pow(d, s - 1))
    return IdentityReport(F.elem(lhs), F.elem(rhs), lhs == rhs)


__all__ = [
    "CauchyDavenportReport",
    "IdentityReport",
    "cauchy_davenport_check",
    "glynn_coefficient",
    "glynn_exponent_power",
    "monomial_character_sum",
    "monomial_character_sum_closed_form",
    "power_sum_subgroup",
]
