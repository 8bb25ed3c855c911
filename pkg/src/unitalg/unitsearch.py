"""Searching additive subgroups for units.

A :class:`SubgroupSpec` is the set of combinations ``sum c_k g_k`` of listed
generators with coefficients drawn from the prime subring (GF(p) in
characteristic p, the integers over Q) or from the whole field.  Every scan
walks coefficient vectors in lexicographic order and stops at the first hit.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from . import linalg
from .algebra import AlgebraCtx, AlgElem
from .errors import InvalidInputError, check_cap
from .field import ExtensionField, FieldCtx, PrimeField


class SubgroupSpec:
    """Additive subgroup spanned by ``generators`` inside ``F^n``.

    ``coeffs`` is ``"prime"`` (prime-subring combinations) or ``"subfield"``
    (combinations with coefficients in the whole base field).
    """

    def __init__(self, field: FieldCtx, generators, coeffs: str = "prime", check_span: bool = True, raw=False):
        if coeffs not in ("prime", "subfield"):
            raise InvalidInputError(f"unknown coefficient domain {coeffs!r}")
        gens = [tuple(g) if raw else tuple(field.convert(x) for x in g) for g in generators]
        if not gens:
            raise InvalidInputError("subgroup needs at least one generator")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise InvalidInputError("generators have different lengths")
        self.field = field
        self.generators = gens
        self.coeffs = coeffs
        self.dim = n
        if check_span and not self.spans():
            raise InvalidInputError("generators do not span the ambient space")

    @classmethod
    def standard(cls, field: FieldCtx, n: int, coeffs: str = "prime"):
        return cls(field, linalg.identity(field, n), coeffs, raw=True)

    def spans(self) -> bool:
        return linalg.rank(self.field, [list(g) for g in self.generators]) == self.dim

    def coefficient_values(self):
        """Ordered coefficient domain for finite scans."""
        F = self.field
        if F.characteristic == 0:
            raise InvalidInputError("finite scan over an infinite coefficient domain")
        if self.coeffs == "prime":
            return [F.from_int(k) for k in range(F.characteristic)]
        return F.elements()

    def size(self) -> int:
        """Number of coefficient vectors a full scan visits."""
        return len(self.coefficient_values()) ** len(self.generators)

    def combine(self, coeffs):
        F = self.field
        out = [F.zero] * self.dim
        for c, g in zip(coeffs, self.generators):
            if c != F.zero:
                out = [F.add(a, F.mul(c, b)) for a, b in zip(out, g)]
        return tuple(out)

    def combinations(self, cap=None):
        """Yield ``(coefficients, vector)`` in lexicographic coefficient order."""
        check_cap(self.size(), cap, "subgroup scan")
        for cs in itertools.product(self.coefficient_values(), repeat=len(self.generators)):
            yield cs, self.combine(cs)

    def __repr__(self):
        return f"SubgroupSpec({len(self.generators)} generators in {self.field!r}^{self.dim}, {self.coeffs})"


class Hit(NamedTuple):
    coefficients: tuple
    element: object


def _check_ambient(A: AlgebraCtx, H: SubgroupSpec):
    if H.field != A.field:
        raise InvalidInputError("subgroup and algebra over different fields")
    if H.dim != A.dim:
        raise InvalidInputError("subgroup vectors have the wrong length")
    if not H.spans():
        raise InvalidInputError("generators do not span the algebra")


def find_unit_in_span(A: AlgebraCtx, H: SubgroupSpec, cap=None) -> Hit:
    """First combination in ``H`` that is a unit of ``A``.

    Positive characteristic only; existence is guaranteed when the
    generators span ``A``.
    """
    _check_ambient(A, H)
    if A.field.characteristic == 0:
        raise InvalidInputError("use find_unit_char_zero over the rationals")
    for cs, v in H.combinations(cap):
        if A.is_unit_raw(v):
            return Hit(cs, AlgElem(A, v))
    raise AssertionError("spanning subgroup contains no unit")  # pragma: no cover


def count_units_in_span(A: AlgebraCtx, H: SubgroupSpec, cap=None) -> int:
    _check_ambient(A, H)
    if A.field.characteristic == 0:
        raise InvalidInputError("counting needs a finite coefficient domain")
    return sum(1 for _, v in H.combinations(cap) if A.is_unit_raw(v))


def unit_lower_bound(A: AlgebraCtx) -> int:
    """``(p - 1) ** dim A``, the guaranteed unit count for commutative A."""
    return (A.field.characteristic - 1) ** A.dim


def find_unit_in_coset(A: AlgebraCtx, H: SubgroupSpec, a, cap=None) -> Hit:
    """Unit ``a + h`` with ``h`` the first combination in ``H`` that works.

    The returned coefficients are those of the offset ``h``.
    """
    _check_ambient(A, H)
    if A.field.characteristic == 0:
        raise InvalidInputError("coset search needs positive characteristic")
    a = A(a)
    F = A.field
    for cs, v in H.combinations(cap):
        w = tuple(F.add(x, y) for x, y in zip(a.coords, v))
        if A.is_unit_raw(w):
            return Hit(cs, AlgElem(A, w))
    raise AssertionError("coset of a spanning subgroup contains no unit")  # pragma: no cover


def _int_order(r):
    out = [0]
    for k in range(1, r + 1):
        out += [k, -k]
    return out


def integer_shell(g: int, r: int):
    """Integer vectors of sup-norm exactly ``r`` in lexicographic order,
    integers ordered 0, 1, -1, 2, -2, ..."""
    if r == 0:
        yield (0,) * g
        return
    vals = _int_order(r)
    for v in itertools.product(vals, repeat=g):
        if max(abs(x) for x in v) == r:
            yield v


def find_unit_char_zero(A: AlgebraCtx, H: SubgroupSpec, cap=None) -> Hit:
    """Integer combination of the generators that is a unit of a Q-algebra.

    Scans sup-norm shells ``r = 0, 1, 2, ...``; the unit polynomial is
    nonzero, so some shell contains a hit.
    """
    _check_ambient(A, H)
    F = A.field
    if F.characteristic != 0:
        raise InvalidInputError("find_unit_char_zero needs a rational algebra")
    g = len(H.generators)
    scanned = 0
    r = 0
    while True:
        for v in integer_shell(g, r):
            scanned += 1
            check_cap(scanned, cap, "integer box scan")
            w = H.combine([F.from_int(x) for x in v])
            if A.is_unit_raw(w):
                return Hit(v, AlgElem(A, w))
        r += 1


# -- split bases ---------------------------------------------------------------


class _Subfield:
    """Coordinates of F over a recognised subfield E (E = F or E = GF(p))."""

    def __init__(self, E: FieldCtx, F: FieldCtx):
        if E == F:
            self.degree = 1
            self.to_e = lambda a: (a,)
            self.embed = lambda a: a
        elif isinstance(E, PrimeField) and isinstance(F, ExtensionField) and E.p == F.p:
            self.degree = F.degree
            self.to_e = F.coords
            self.embed = lambda a: a
        else:
            raise InvalidInputError(f"{E!r} is not recognised as a subfield of {F!r}")
        self.E = E
        self.F = F


def split_unit_basis(E: FieldCtx, F: FieldCtx, n: int, C):
    """E-basis ``B`` of ``W = sum_c E c`` with every all-nonzero E-combination
    of ``B`` landing in ``(F^*)^n``.

    ``C`` must be ``n`` vectors forming an F-basis of ``F^n``.  Functionals
    on ``W`` are row vectors on the basis ``C``; each ``rho_i`` is picked
    greedily from the RREF basis of the annihilator of ``W cap ker pi_i``.
    Returns ``(B, rhos)``: ``B`` as tuples of FieldElem, each ``rho_i`` as
    a row of E-elements on the basis ``C``.
    """
    sub = _Subfield(E, F)
    C = [[F.convert(x) for x in c] for c in C]
    if len(C) != n or any(len(c) != n for c in C):
        raise InvalidInputError(f"C must be {n} vectors of length {n}")
    if n and linalg.det(F, C) == F.zero:
        raise InvalidInputError("C is not an F-basis of F^n, so W (x) F -> F^n is not an isomorphism")
    e = sub.degree
    # pi_i(sum_k x_k C_k) = sum_k x_k C_k[i]
    pis = [[C[k][i] for k in range(n)] for i in range(n)]
    phis = []
    for i in range(n):
        rows = [[sub.to_e(C[k][i])[r] for k in range(n)] for r in range(e)]
        basis, _ = linalg.row_basis(E, rows)
        phis.append(basis)
    chosen = [list(map(sub.embed, pi)) for pi in pis]
    rhos = []
    for i in range(n):
        for rho in phis[i]:
            trial = chosen[:i] + [[sub.embed(x) for x in rho]] + chosen[i + 1:]
            if linalg.det(F, trial) != F.zero:
                chosen[i] = trial[i]
                rhos.append(list(rho))
                break
        else:
            raise AssertionError(f"no admissible functional for coordinate {i + 1}")  # pragma: no cover
    # B_j has rho-coordinates e_j: its C-coefficients are column j of R^-1
    Rinv = linalg.inverse(E, rhos) if n else []
    B = []
    for j in range(n):
        b = [F.zero] * n
        for k in range(n):
            c = sub.embed(Rinv[k][j])
            if c != F.zero:
                b = [F.add(x, F.mul(c, y)) for x, y in zip(b, C[k])]
        B.append(tuple(F.elem(x) for x in b))
    return B, [[E.elem(x) for x in rho] for rho in rhos]


def verify_unit_basis(E: FieldCtx, F: FieldCtx, n: int, B, cap=None) -> bool:
    """Exhaustively check that every combination with all coefficients in
    ``E^*`` has all ``n`` coordinates nonzero."""
    sub = _Subfield(E, F)
    if not E.is_finite:
        raise InvalidInputError("verification needs a finite E")
    B = [[F.convert(x) for x in b] for b in B]
    if any(len(b) != n for b in B):
        raise InvalidInputError(f"basis vectors must have length {n}")
    units = [sub.embed(c) for c in E.elements() if c != E.zero]
    check_cap(len(units) ** len(B), cap, "basis verification")
    for cs in itertools.product(units, repeat=len(B)):
        v = [F.zero] * n
        for c, b in zip(cs, B):
            v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        if any(x == F.zero for x in v):
            return False
    return True


def subgroup_from_json(field: FieldCtx, obj, check_span: bool = True) -> SubgroupSpec:
    if not isinstance(obj, dict) or "generators" not in obj:
        raise InvalidInputError("subgroup JSON needs 'generators'")
    gens = [[field.decode(x) for x in g] for g in obj["generators"]]
    return SubgroupSpec(field, gens, obj.get("coeffs", "prime"), check_span=check_span, raw=True)
