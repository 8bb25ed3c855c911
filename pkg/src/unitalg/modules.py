"""Finite-dimensional modules over an :class:`~unitalg.algebra.AlgebraCtx`.

A module is a list of action matrices, one per algebra basis element.
Searches scan prime-subring combinations of a hom-space basis; a ``None``
verdict is only returned after a complete scan.
"""

from __future__ import annotations

import itertools

from . import linalg
from .algebra import AlgebraCtx, algebra_from_json, algebra_to_json
from .errors import FieldMismatchError, InvalidInputError, check_cap
from .unitsearch import Hit, SubgroupSpec


class AModule:
    def __init__(self, algebra: AlgebraCtx, action, validate=True, raw=False):
        F = algebra.field
        if len(action) != algebra.dim:
            raise InvalidInputError(f"need one action matrix per basis element ({algebra.dim})")
        if raw:
            mats = [[list(r) for r in m] for m in action]
        else:
            mats = [[[F.convert(x) for x in r] for r in m] for m in action]
        d = len(mats[0]) if mats else 0
        for m in mats:
            if len(m) != d or any(len(r) != d for r in m):
                raise InvalidInputError(f"action matrices must all be {d}x{d}")
        self.algebra = algebra
        self.field = F
        self.dim = d
        self.action = mats
        if validate:
            self._validate()

    def _validate(self):
        A, F, d = self.algebra, self.field, self.dim
        if self.act_matrix(A.one) != linalg.identity(F, d):
            raise InvalidInputError("the identity of the algebra does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = linalg.matmul(F, self.action[i], self.action[j]) if d else []
                rhs = self.act_matrix(A.structure[i][j])
                if lhs != rhs:
                    raise InvalidInputError(
                        f"action violates the relation for {A.basis_names[i]}*{A.basis_names[j]}"
                    )

    def act_matrix(self, coords):
        """Matrix of the algebra element with raw ``coords``."""
        F, d = self.field, self.dim
        out = linalg.zeros(F, d, d)
        for c, m in zip(coords, self.action):
            if c != F.zero:
                out = linalg.matadd(F, out, linalg.scale(F, c, m))
        return out

    def orbit_span_rank(self, v) -> int:
        """dim_F of ``A v``."""
        return linalg.rank(self.field, [linalg.matvec(self.field, m, v) for m in self.action])

    def elements(self):
        return itertools.product(self.field.elements(), repeat=self.dim)

    def __eq__(self, other):
        return isinstance(other, AModule) and self.algebra == other.algebra and self.action == other.action

    def __repr__(self):
        return f"AModule(dim={self.dim} over {self.algebra!r})"


def build_module(A: AlgebraCtx, action) -> AModule:
    return AModule(A, action)


def regular_module(A: AlgebraCtx) -> AModule:
    """A acting on itself by left multiplication."""
    return AModule(A, [A.regrep_raw(e.coords) for e in A.basis()], validate=False, raw=True)


def direct_sum(M: AModule, N: AModule) -> AModule:
    _same_algebra(M, N)
    F = M.field
    mats = []
    for a, b in zip(M.action, N.action):
        top = [list(r) + [F.zero] * N.dim for r in a]
        bottom = [[F.zero] * M.dim + list(r) for r in b]
        mats.append(top + bottom)
    return AModule(M.algebra, mats, validate=False, raw=True)


def conjugate(M: AModule, T) -> AModule:
    """The module with action ``T rho(e) T^-1`` (T is an isomorphism onto it)."""
    F = M.field
    T = [[F.convert(x) for x in r] for r in T]
    Tinv = linalg.inverse(F, T)
    mats = [linalg.matmul(F, linalg.matmul(F, T, m), Tinv) for m in M.action]
    return AModule(M.algebra, mats, validate=False, raw=True)


def submodule(M: AModule, basis) -> AModule:
    """Restriction of ``M`` to an invariant subspace with the given raw basis
    (rows).  Raises if the subspace is not invariant."""
    F = M.field
    Bt = linalg.transpose(basis)  # columns are basis vectors
    mats = []
    for m in M.action:
        cols = []
        for v in basis:
            w = linalg.matvec(F, m, v)
            x = linalg.solve(F, Bt, w)
            if x is None:
                raise InvalidInputError("subspace is not invariant")
            cols.append(x)
        mats.append(linalg.transpose(cols))
    return AModule(M.algebra, mats, validate=False, raw=True)


def _same_algebra(M, N):
    if M.algebra != N.algebra:
        raise FieldMismatchError("modules over different algebras")


def _hom_basis_raw(M: AModule, N: AModule):
    """RREF basis of Hom_A(M, N) as flattened d_N x d_M matrices."""
    _same_algebra(M, N)
    F = M.field
    dm, dn = M.dim, N.dim
    nvar = dm * dn
    rows = []
    for rm, rn in zip(M.action, N.action):
        # (h rm - rn h)[r][c] = sum_k h[r][k] rm[k][c] - sum_k rn[r][k] h[k][c]
        for r in range(dn):
            for c in range(dm):
                eq = [F.zero] * nvar
                for k in range(dm):
                    if rm[k][c] != F.zero:
                        eq[r * dm + k] = F.add(eq[r * dm + k], rm[k][c])
                for k in range(dn):
                    if rn[r][k] != F.zero:
                        eq[k * dm + c] = F.sub(eq[k * dm + c], rn[r][k])
                if any(x != F.zero for x in eq):
                    rows.append(eq)
    null = linalg.nullspace(F, rows, nvar)
    if not null:
        return [], []
    return linalg.row_basis(F, null)


def _unflatten(v, rows, cols):
    return [list(v[r * cols:(r + 1) * cols]) for r in range(rows)]


def hom_space(M: AModule, N: AModule):
    """Basis of Hom_A(M, N): d_N x d_M matrices ``h`` with
    ``h rho_M(e) = rho_N(e) h`` for every basis element ``e``."""
    F = M.field
    basis, _ = _hom_basis_raw(M, N)
    return [[[F.elem(x) for x in r] for r in _unflatten(v, N.dim, M.dim)] for v in basis]


def endomorphism_algebra(N: AModule):
    """``(End_A(N), basis, pivots)`` with the algebra on the RREF hom basis.

    Coordinates of an endomorphism are its flattened entries at the pivot
    columns of the basis.
    """
    F = N.field
    basis, piv = _hom_basis_raw(N, N)
    d = N.dim
    mats = [_unflatten(v, d, d) for v in basis]
    h = len(basis)

    def coords(m):
        flat = [x for r in m for x in r]
        return [flat[c] for c in piv]

    c = [[coords(linalg.matmul(F, mats[a], mats[b])) for b in range(h)] for a in range(h)]
    one = coords(linalg.identity(F, d))
    B = AlgebraCtx(F, c, one, [f"h{k + 1}" for k in range(h)], raw=True)
    return B, mats, piv


def _prime_combos(F, basis_mats, cap, what):
    p = F.characteristic
    if p == 0:
        raise InvalidInputError(f"{what} needs positive characteristic")
    check_cap(p ** len(basis_mats), cap, what)
    coeffs = [F.from_int(k) for k in range(p)]
    rows = len(basis_mats[0]) if basis_mats else 0
    cols = len(basis_mats[0][0]) if rows else 0
    for cs in itertools.product(coeffs, repeat=len(basis_mats)):
        m = linalg.zeros(F, rows, cols)
        for c, b in zip(cs, basis_mats):
            if c != F.zero:
                m = linalg.matadd(F, m, linalg.scale(F, c, b))
        yield cs, m


def find_generator(M: AModule, H: SubgroupSpec, cap=None):
    """First combination ``x`` in ``H`` with ``A x = M``, or ``None`` when
    no element of ``H`` generates (then ``M`` is not cyclic)."""
    if H.field != M.field or H.dim != M.dim:
        raise InvalidInputError("subgroup does not live in the module")
    if not H.spans():
        raise InvalidInputError("generators do not span the module")
    if M.field.characteristic == 0:
        raise InvalidInputError("generator search needs positive characteristic")
    for cs, v in H.combinations(cap):
        if M.orbit_span_rank(v) == M.dim:
            return Hit(cs, tuple(M.field.elem(x) for x in v))
    return None


def find_isomorphism(M: AModule, N: AModule, cap=None):
    """An invertible A-linear map ``M -> N`` (d_N x d_M FieldElem matrix),
    or ``None`` if the modules are not isomorphic."""
    _same_algebra(M, N)
    if M.dim != N.dim:
        return None
    F = M.field
    basis, _ = _hom_basis_raw(M, N)
    mats = [_unflatten(v, N.dim, M.dim) for v in basis]
    if not mats:
        return None if M.dim else []
    for _, h in _prime_combos(F, mats, cap, "isomorphism scan"):
        if linalg.det(F, h) != F.zero:
            return [[F.elem(x) for x in r] for r in h]
    return None


def summand_test(M: AModule, N: AModule, cap=None):
    """A pair ``(f, g)`` of A-linear maps ``f: M -> N``, ``g: N -> M`` with
    ``f g`` a unit of End_A(N), certifying that ``N`` is a direct summand
    of ``M``; ``None`` if no such pair exists."""
    _same_algebra(M, N)
    F = M.field
    if F.characteristic == 0:
        raise InvalidInputError("summand test needs positive characteristic")
    V = [_unflatten(v, N.dim, M.dim) for v in _hom_basis_raw(M, N)[0]]
    W = [_unflatten(v, M.dim, N.dim) for v in _hom_basis_raw(N, M)[0]]
    if N.dim == 0:
        return ([], [])
    if not V or not W:
        return None
    B, _, piv = endomorphism_algebra(N)
    p = F.characteristic
    check_cap(p ** (len(V) + len(W)), cap, "summand scan")
    gs = [g for _, g in _prime_combos(F, W, None, "summand scan")]
    for _, f in _prime_combos(F, V, None, "summand scan"):
        for g in gs:
            fg = linalg.matmul(F, f, g)
            flat = [x for r in fg for x in r]
            if B.is_unit_raw([flat[c] for c in piv]):
                wrap = lambda m: [[F.elem(x) for x in r] for r in m]  # noqa: E731
                return wrap(f), wrap(g)
    return None


def module_from_json(obj, algebra: AlgebraCtx | None = None) -> AModule:
    if not isinstance(obj, dict) or "action" not in obj:
        raise InvalidInputError("module JSON needs 'action'")
    A = algebra_from_json(obj["algebra"]) if "algebra" in obj else algebra
    if A is None:
        raise InvalidInputError("module JSON needs 'algebra'")
    if obj.get("regular"):
        return regular_module(A)
    F = A.field
    mats = [[[F.decode(x) for x in r] for r in m] for m in obj["action"]]
    M = AModule(A, mats, raw=True)
    if "dim" in obj and obj["dim"] != M.dim:
        raise InvalidInputError(f"declared dim {obj['dim']} but matrices are {M.dim}x{M.dim}")
    return M


def module_to_json(M: AModule) -> dict:
    F = M.field
    return {
        "algebra": algebra_to_json(M.algebra),
        "dim": M.dim,
        "action": [[[F.encode(x) for x in r] for r in m] for m in M.action],
    }


def matrix_to_json(F, m) -> list:
    return [[F.encode(F.convert(x)) for x in r] for r in m]
