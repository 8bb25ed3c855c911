"""Normal bases of GF(q^m) over GF(q) through the cyclic group ring.

The Galois group is generated by ``sigma: x -> x^q``; group element ``j``
is ``sigma^j`` and is basis vector ``g{j}`` of the group ring F[G] over the
top field F.  ``phi(alpha) = sum_j sigma^(-j)(alpha) * g{j}``, and alpha
generates a normal basis exactly when ``phi(alpha)`` is a unit of F[G].
"""

from __future__ import annotations

import itertools

from . import linalg
from .algebra import AlgElem, cyclic_group_table, group_ring
from .errors import InvalidInputError, check_cap
from .field import GF, FieldCtx, PrimeField, is_prime
from .unitsearch import Hit

_VALIDATE_LIMIT = 2**12


class GaloisCtx:
    """GF(q^m) / GF(q) with q = p^e, the top field built as GF(p)[t]/(f)."""

    def __init__(self, p: int, e: int, m: int, top: FieldCtx | None = None):
        if not is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
        if e < 1 or m < 1:
            raise InvalidInputError("e and m must be positive")
        F = top if top is not None else GF(p, e * m)
        if F.characteristic != p or F.degree != e * m:
            raise InvalidInputError("top field has the wrong size")
        self.p, self.e, self.m = p, e, m
        self.q = p**e
        self.field = F
        self.group_ring = group_ring(F, cyclic_group_table(m))
        self.base_basis = self._base_basis()
        if F.cardinality <= _VALIDATE_LIMIT:
            self._validate()

    def sigma(self, a, j: int = 1):
        """``sigma^j(a)`` on raw values, for any integer ``j``."""
        return self.field.pow(a, self.q ** (j % self.m))

    def _base_basis(self):
        """GF(p)-basis of the fixed field of sigma, as raw top-field values."""
        F = self.field
        n = F.degree
        Fp = PrimeField(self.p)
        basis_elems = [F.from_coords([int(i == k) for i in range(n)]) for k in range(n)]
        # columns: coordinates of sigma(t^k) - t^k
        cols = []
        for k, b in enumerate(basis_elems):
            cols.append(F.coords(F.sub(self.sigma(b), b)))
        mat = linalg.transpose(cols)
        kernel = linalg.nullspace(Fp, mat, n)
        if len(kernel) != self.e:
            raise AssertionError("fixed field has the wrong dimension")  # pragma: no cover
        return [F.from_coords(v) for v in kernel]

    def _validate(self):
        F = self.field
        elems = F.elements()
        fixed = [a for a in elems if self.sigma(a) == a]
        if len(fixed) != self.q:
            raise AssertionError(f"sigma fixes {len(fixed)} elements, expected {self.q}")
        for j in range(1, self.m):
            if all(self.sigma(a, j) == a for a in elems):
                raise AssertionError(f"sigma^{j} is the identity")

    def base_field_elements(self):
        """All q elements of GF(q) inside the top field, ascending raw value."""
        F = self.field
        out = set()
        for cs in itertools.product(range(self.p), repeat=self.e):
            v = F.zero
            for c, b in zip(cs, self.base_basis):
                if c:
                    v = F.add(v, F.mul(F.from_int(c), b))
            out.add(v)
        return sorted(out)

    def act(self, j: int, x: AlgElem) -> AlgElem:
        """Left multiplication by the group element ``sigma^j``."""
        g = [self.field.zero] * self.m
        g[j % self.m] = self.field.one
        return AlgElem(self.group_ring, g) * x

    def __repr__(self):
        return f"GaloisCtx(q={self.q}, m={self.m}, top={self.field!r})"


def _raw(ctx: GaloisCtx, alpha):
    return ctx.field.convert(alpha)


def phi_map(ctx: GaloisCtx, alpha) -> AlgElem:
    """``sum_j sigma^(-j)(alpha) * g{j}`` in F[G]."""
    a = _raw(ctx, alpha)
    return AlgElem(ctx.group_ring, [ctx.sigma(a, -j) for j in range(ctx.m)])


def is_normal_generator(ctx: GaloisCtx, alpha) -> bool:
    """Whether the conjugates of ``alpha`` form a GF(q)-basis, decided by
    the unit test on ``phi(alpha)``."""
    return ctx.group_ring.is_unit_raw(phi_map(ctx, alpha).coords)


def _gfq_rank(ctx: GaloisCtx, elements) -> int:
    """GF(q)-rank of the given raw top-field elements, computed over GF(p)
    from the products ``gamma * x`` with ``gamma`` in a GF(p)-basis of GF(q)."""
    F = ctx.field
    rows = [list(F.coords(F.mul(g, x))) for x in elements for g in ctx.base_basis]
    return linalg.rank(PrimeField(ctx.p), rows) // ctx.e


def is_normal_by_rank(ctx: GaloisCtx, alpha) -> bool:
    """Direct check: ``(sigma^j alpha)_j`` has full GF(q)-rank m."""
    a = _raw(ctx, alpha)
    return _gfq_rank(ctx, [ctx.sigma(a, j) for j in range(ctx.m)]) == ctx.m


def find_normal_generator(ctx: GaloisCtx, generators, cap=None) -> Hit:
    """First prime-subring combination of ``generators`` generating a normal
    basis.  The generators must span the top field over GF(q)."""
    F = ctx.field
    gens = [_raw(ctx, g) for g in generators]
    if not gens or _gfq_rank(ctx, gens) != ctx.m:
        raise InvalidInputError("generators do not span the top field over the base field")
    check_cap(ctx.p ** len(gens), cap, "normal generator scan")
    for cs in itertools.product(range(ctx.p), repeat=len(gens)):
        a = F.zero
        for c, g in zip(cs, gens):
            if c:
                a = F.add(a, F.mul(F.from_int(c), g))
        if is_normal_generator(ctx, F.elem(a)):
            return Hit(cs, F.elem(a))
    raise AssertionError("spanning subgroup contains no normal generator")  # pragma: no cover


def phi_rank(ctx: GaloisCtx, elements) -> int:
    """F-rank of the group-ring vectors ``phi(b)`` (``elements`` as FieldElem)."""
    rows = [list(phi_map(ctx, b).coords) for b in elements]
    return linalg.rank(ctx.field, rows)


__all__ = [
    "GaloisCtx",
    "phi_map",
    "is_normal_generator",
    "is_normal_by_rank",
    "find_normal_generator",
    "phi_rank",
]
