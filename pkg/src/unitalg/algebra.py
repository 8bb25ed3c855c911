"""Finite-dimensional associative algebras given by structure constants.

``A.structure[i][j]`` is the coordinate vector of ``e_i * e_j``.  All
coordinates are raw field values (see :mod:`unitalg.field`).
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import CapExceededError, FieldMismatchError, InvalidInputError, check_cap
from .field import FieldCtx, FieldElem
from .multipoly import MultiPoly


class AlgebraCtx:
    """A validated algebra: field, dimension, structure tensor, identity."""

    def __init__(self, field: FieldCtx, structure, one, names=None, validate=True, raw=False):
        n = len(structure)
        if n == 0:
            raise InvalidInputError("algebra dimension must be at least 1")
        F = field
        tensor = []
        for i, row in enumerate(structure):
            if len(row) != n:
                raise InvalidInputError("structure tensor must have shape n x n x n")
            trow = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise InvalidInputError("structure tensor must have shape n x n x n")
                trow.append(tuple(vec) if raw else tuple(F.convert(x) for x in vec))
            tensor.append(trow)
        if len(one) != n:
            raise InvalidInputError("identity vector has wrong length")
        self.field = F
        self.dim = n
        self.structure = tensor
        self.one = tuple(one) if raw else tuple(F.convert(x) for x in one)
        self.basis_names = list(names) if names is not None else [f"e{i + 1}" for i in range(n)]
        if len(self.basis_names) != n:
            raise InvalidInputError("wrong number of basis names")
        zero = F.zero
        self._sparse = [
            [[(k, c) for k, c in enumerate(tensor[i][j]) if c != zero] for j in range(n)]
            for i in range(n)
        ]
        # left multiplication matrices: column j of _left[i] is e_i * e_j
        self._left = [[[tensor[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
        if validate:
            self._validate()

    # -- validation -----------------------------------------------------------
    def _validate(self):
        n = self.dim
        basis = [self._unit_vec(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                eij = self.structure[i][j]
                for k in range(n):
                    lhs = self.mul_raw(eij, basis[k])
                    rhs = self.mul_raw(basis[i], self.structure[j][k])
                    if lhs != rhs:
                        raise InvalidInputError(
                            f"structure constants are not associative at "
                            f"({self.basis_names[i]}, {self.basis_names[j]}, {self.basis_names[k]})"
                        )
        for i in range(n):
            if self.mul_raw(self.one, basis[i]) != basis[i] or self.mul_raw(basis[i], self.one) != basis[i]:
                raise InvalidInputError(f"given identity does not act as 1 on {self.basis_names[i]}")

    def _unit_vec(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return tuple(v)

    # -- raw arithmetic ----------------------------------------------------
    def mul_raw(self, x, y):
        F = self.field
        zero = F.zero
        add, mul = F.add, F.mul
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            row = self._sparse[i]
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                s = mul(xi, yj)
                for k, c in row[j]:
                    out[k] = add(out[k], mul(s, c))
        return tuple(out)

    def regrep_raw(self, x):
        F = self.field
        n = self.dim
        M = [[F.zero] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi == F.zero:
                continue
            L = self._left[i]
            for k in range(n):
                Mk, Lk = M[k], L[k]
                for j in range(n):
                    if Lk[j] != F.zero:
                        Mk[j] = F.add(Mk[j], F.mul(xi, Lk[j]))
        return M

    def is_unit_raw(self, x) -> bool:
        return linalg.det(self.field, self.regrep_raw(x)) != self.field.zero

    # -- element layer -------------------------------------------------------
    def __call__(self, coords) -> AlgElem:
        if isinstance(coords, AlgElem):
            if coords.algebra != self:
                raise FieldMismatchError("element of a different algebra")
            return coords
        if len(coords) != self.dim:
            raise InvalidInputError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgElem(self, tuple(self.field.convert(c) for c in coords))

    def basis(self) -> list[AlgElem]:
        return [AlgElem(self, self._unit_vec(i)) for i in range(self.dim)]

    def identity(self) -> AlgElem:
        return AlgElem(self, self.one)

    def zero(self) -> AlgElem:
        return AlgElem(self, (self.field.zero,) * self.dim)

    def elements(self):
        """All elements (finite field), coordinates in lexicographic order."""
        F = self.field
        if not F.is_finite:
            raise InvalidInputError("cannot enumerate an algebra over an infinite field")
        for coords in itertools.product(F.elements(), repeat=self.dim):
            yield AlgElem(self, coords)

    @property
    def cardinality(self):
        c = self.field.cardinality
        return None if c is None else c**self.dim

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.structure[i][j] == self.structure[j][i] for i in range(n) for j in range(i + 1, n))

    def key(self):
        return (self.field.key(), tuple(tuple(r) for r in self.structure), self.one)

    def __eq__(self, other):
        return isinstance(other, AlgebraCtx) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AlgebraCtx({self.field!r}, dim={self.dim})"


class AlgElem:
    """Element of an :class:`AlgebraCtx` stored as a tuple of raw coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraCtx, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    @property
    def field(self):
        return self.algebra.field

    def vector(self) -> list[FieldElem]:
        return [self.field.elem(c) for c in self.coords]

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise FieldMismatchError("elements of different algebras")
            return other
        if isinstance(other, (int, FieldElem)):
            c = self.field.convert(other)
            return AlgElem(self.algebra, tuple(self.field.mul(c, x) for x in self.algebra.one))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return AlgElem(self.algebra, tuple(F.add(a, b) for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return AlgElem(self.algebra, tuple(F.neg(a) for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self + (-o)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)) and not isinstance(other, bool):
            c = self.field.convert(other)
            return AlgElem(self.algebra, tuple(self.field.mul(c, a) for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgElem(self.algebra, self.algebra.mul_raw(self.coords, o.coords))

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElem)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, AlgElem) and self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        F = self.field
        parts = [
            f"{F.format(c)}*{name}" for c, name in zip(self.coords, self.algebra.basis_names) if c != F.zero
        ]
        return " + ".join(parts) or "0"

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> AlgElem:
        return inverse(self)


# -- constructors ------------------------------------------------------------


def build_algebra(F: FieldCtx, structure, one, names=None) -> AlgebraCtx:
    return AlgebraCtx(F, structure, one, names)


def _empty_tensor(F, n):
    return [[[F.zero] * n for _ in range(n)] for _ in range(n)]


def matrix_algebra(F: FieldCtx, m: int) -> AlgebraCtx:
    """M(m, F) on the matrix units ``b_ij`` (row-major)."""
    if m < 1:
        raise InvalidInputError("matrix size must be at least 1")
    n = m * m
    c = _empty_tensor(F, n)
    for i, j, k, l in itertools.product(range(m), repeat=4):
        if j == k:
            c[i * m + j][k * m + l][i * m + l] = F.one
    one = [F.one if (a // m) == (a % m) else F.zero for a in range(n)]
    names = [f"b{i + 1}{j + 1}" for i in range(m) for j in range(m)]
    return AlgebraCtx(F, c, one, names, raw=True)


def _check_group_table(table):
    m = len(table)
    if m == 0 or any(len(r) != m for r in table):
        raise InvalidInputError("Cayley table must be a nonempty square")
    if any(not isinstance(x, int) or not 0 <= x < m for r in table for x in r):
        raise InvalidInputError("Cayley table entries must be indices 0..m-1")
    ident = next((g for g in range(m) if list(table[g]) == list(range(m))), None)
    if ident is None or [table[h][ident] for h in range(m)] != list(range(m)):
        raise InvalidInputError("Cayley table has no identity element")
    for g in range(m):
        if sorted(table[g]) != list(range(m)) or sorted(table[h][g] for h in range(m)) != list(range(m)):
            raise InvalidInputError("Cayley table is not a Latin square")
    for a, b, c in itertools.product(range(m), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidInputError("Cayley table is not associative")
    return ident


def group_ring(F: FieldCtx, cayley) -> AlgebraCtx:
    """F[G] for the group with Cayley table ``cayley`` (``cayley[g][h] = gh``)."""
    ident = _check_group_table(cayley)
    m = len(cayley)
    c = _empty_tensor(F, m)
    for g in range(m):
        for h in range(m):
            c[g][h][cayley[g][h]] = F.one
    one = [F.one if g == ident else F.zero for g in range(m)]
    return AlgebraCtx(F, c, one, [f"g{g}" for g in range(m)], validate=False, raw=True)


def cyclic_group_table(m: int):
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def permutation_group_table(perms):
    """Cayley table of a list of permutations (tuples), composing right to left."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for a in perms:
        row = []
        for b in perms:
            comp = tuple(a[b[x]] for x in range(len(b)))
            if comp not in index:
                raise InvalidInputError("permutations are not closed under composition")
            row.append(index[comp])
        table.append(row)
    return table


def symmetric_group_table(k: int):
    return permutation_group_table(sorted(itertools.permutations(range(k))))


def product(*parts: AlgebraCtx) -> AlgebraCtx:
    """Direct product with componentwise multiplication."""
    if not parts:
        raise InvalidInputError("product of no algebras")
    F = parts[0].field
    for A in parts[1:]:
        if A.field != F:
            raise FieldMismatchError("product factors over different fields")
    n = sum(A.dim for A in parts)
    c = _empty_tensor(F, n)
    one = []
    names = []
    off = 0
    for idx, A in enumerate(parts):
        for i in range(A.dim):
            for j in range(A.dim):
                for k in range(A.dim):
                    c[off + i][off + j][off + k] = A.structure[i][j][k]
        one.extend(A.one)
        names.extend(f"{name}_{idx + 1}" for name in A.basis_names)
        off += A.dim
    return AlgebraCtx(F, c, one, names, validate=False, raw=True)


def total_split(F: FieldCtx, n: int) -> AlgebraCtx:
    """F^n with componentwise operations."""
    if n < 1:
        raise InvalidInputError("total_split needs n >= 1")
    c = _empty_tensor(F, n)
    for i in range(n):
        c[i][i][i] = F.one
    return AlgebraCtx(F, c, [F.one] * n, validate=False, raw=True)


def combine(kind: str, parts=(), n: int | None = None, field: FieldCtx | None = None) -> AlgebraCtx:
    if kind == "product":
        return product(*parts)
    if kind == "total_split":
        if field is None:
            field = parts[0].field if parts else None
        if field is None or n is None:
            raise InvalidInputError("total_split needs a field and n")
        return total_split(field, n)
    raise InvalidInputError(f"unknown combination {kind!r}")


def truncated_polynomial(F: FieldCtx, k: int) -> AlgebraCtx:
    """F[X]/(X^k) on the basis 1, X, ..., X^(k-1)."""
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    c = _empty_tensor(F, k)
    for i in range(k):
        for j in range(k):
            if i + j < k:
                c[i][j][i + j] = F.one
    names = ["1"] + [("x" if i == 1 else f"x^{i}") for i in range(1, k)]
    return AlgebraCtx(F, c, [F.one] + [F.zero] * (k - 1), names, validate=False, raw=True)


def dual_numbers(F: FieldCtx) -> AlgebraCtx:
    return truncated_polynomial(F, 2)


def upper_triangular(F: FieldCtx, m: int) -> AlgebraCtx:
    """Upper-triangular m x m matrices on the units ``e_ij`` with i <= j."""
    pairs = [(i, j) for i in range(m) for j in range(i, m)]
    idx = {pq: a for a, pq in enumerate(pairs)}
    n = len(pairs)
    c = _empty_tensor(F, n)
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        if j == k:
            c[idx[(i, j)]][idx[(k, l)]][idx[(i, l)]] = F.one
    one = [F.one if i == j else F.zero for i, j in pairs]
    return AlgebraCtx(F, c, one, [f"e{i + 1}{j + 1}" for i, j in pairs], raw=True)


# -- operations --------------------------------------------------------------


def regular_representation(x: AlgElem):
    """Matrix of ``a -> x a``; column j holds the coordinates of ``x e_j``."""
    F = x.field
    return [[F.elem(v) for v in row] for row in x.algebra.regrep_raw(x.coords)]


def is_unit(x: AlgElem) -> bool:
    return x.algebra.is_unit_raw(x.coords)


def inverse(x: AlgElem) -> AlgElem:
    A = x.algebra
    sol = linalg.solve(A.field, A.regrep_raw(x.coords), list(A.one))
    if sol is None or not A.is_unit_raw(x.coords):
        raise InvalidInputError(f"{x!r} is not a unit")
    y = AlgElem(A, sol)
    if (y * x).coords != A.one:
        raise AssertionError("left inverse is not a right inverse")  # pragma: no cover
    return y


def unit_polynomial(A: AlgebraCtx, max_dim: int = 8) -> MultiPoly:
    """``det(sum_i X_i M(e_i))`` as a polynomial in ``A.dim`` variables.

    Expands the determinant along rows with memoised column subsets.
    """
    n = A.dim
    if n > max_dim:
        raise CapExceededError(n, max_dim, "symbolic determinant dimension")
    F = A.field
    # entries[k][j] is the linear form sum_i X_i c[i][j][k]
    entries = []
    for k in range(n):
        row = []
        for j in range(n):
            t = {}
            for i in range(n):
                c = A.structure[i][j][k]
                if c != F.zero:
                    exp = [0] * n
                    exp[i] = 1
                    t[tuple(exp)] = c
            row.append(MultiPoly(F, n, t))
        entries.append(row)
    memo = {}

    def minor(r, cols):
        if r == n:
            return MultiPoly.constant(F, n, 1)
        if cols in memo:
            return memo[cols]
        total = MultiPoly.zero(F, n)
        for pos, c in enumerate(cols):
            e = entries[r][c]
            if e.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = e * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


class IdealBasis:
    """A two-sided ideal given by an RREF basis of coordinate vectors."""

    def __init__(self, algebra: AlgebraCtx, vectors, validate=True, raw=False):
        F = algebra.field
        vecs = [list(v) if raw else [F.convert(x) for x in v] for v in vectors]
        if any(len(v) != algebra.dim for v in vecs):
            raise InvalidInputError("ideal vector of wrong length")
        if vecs:
            R, piv = linalg.row_basis(F, vecs)
        else:
            R, piv = [], []
        self.algebra = algebra
        self.vectors = [tuple(r) for r in R]
        self.pivots = piv
        if validate:
            self._validate()

    @property
    def dim(self):
        return len(self.vectors)

    def contains(self, v) -> bool:
        return linalg.in_span(self.algebra.field, self.vectors, self.pivots, v)

    def _validate(self):
        A = self.algebra
        for v in self.vectors:
            for e in A.basis():
                if not self.contains(A.mul_raw(e.coords, v)) or not self.contains(A.mul_raw(v, e.coords)):
                    raise InvalidInputError("vectors do not span a two-sided ideal")

    def __eq__(self, other):
        return isinstance(other, IdealBasis) and self.algebra == other.algebra and self.vectors == other.vectors

    def __repr__(self):
        return f"IdealBasis(dim={self.dim}, vectors={self.vectors})"


def jacobson_radical(A: AlgebraCtx, cap=None) -> IdealBasis:
    """J(A) as the set of x with 1 + a x a unit for every a in A.

    Exhaustive over the finite algebra: ``|A|`` candidates, each tested
    against up to ``|A|`` multipliers.
    """
    F = A.field
    if not F.is_finite:
        raise InvalidInputError("radical computation needs a finite field")
    size = A.cardinality
    check_cap(size, cap, "radical scan")
    elems = list(itertools.product(F.elements(), repeat=A.dim))
    add = F.add
    one = A.one
    members = []
    for x in elems:
        ok = True
        for a in elems:
            ax = A.mul_raw(a, x)
            if not A.is_unit_raw(tuple(add(u, v) for u, v in zip(one, ax))):
                ok = False
                break
        if ok:
            members.append(x)
    J = IdealBasis(A, members, validate=True, raw=True)
    if len(members) != F.cardinality**J.dim:
        raise AssertionError("radical candidates do not form a subspace")  # pragma: no cover
    return J


class Projection:
    """The quotient map ``A -> A/I`` restricted to complement coordinates."""

    def __init__(self, source: AlgebraCtx, target: AlgebraCtx, ideal: IdealBasis, complement):
        self.source = source
        self.target = target
        self.ideal = ideal
        self.complement = complement

    def raw(self, coords):
        F = self.source.field
        r = linalg.reduce_by(F, self.ideal.vectors, self.ideal.pivots, coords)
        return tuple(r[c] for c in self.complement)

    def __call__(self, x: AlgElem) -> AlgElem:
        coords = x.coords if isinstance(x, AlgElem) else tuple(self.source.field.convert(c) for c in x)
        return AlgElem(self.target, self.raw(coords))


def quotient_by_ideal(A: AlgebraCtx, I: IdealBasis):
    """``(A/I, projection)`` on the complement basis of non-pivot columns."""
    if I.algebra != A:
        raise FieldMismatchError("ideal belongs to another algebra")
    I._validate()
    if I.dim == A.dim:
        raise InvalidInputError("quotient by the whole algebra")
    comp = [c for c in range(A.dim) if c not in set(I.pivots)]
    F = A.field

    def red(v):
        r = linalg.reduce_by(F, I.vectors, I.pivots, v)
        return [r[c] for c in comp]

    c = [[red(A.structure[a][b]) for b in comp] for a in comp]
    Q = AlgebraCtx(F, c, red(A.one), [A.basis_names[k] for k in comp], raw=True)
    return Q, Projection(A, Q, I, comp)


# -- JSON ----------------------------------------------------------------------


def algebra_from_json(obj, field: FieldCtx | None = None) -> AlgebraCtx:
    from .field import make_field

    if not isinstance(obj, dict):
        raise InvalidInputError("algebra JSON must be an object")
    if "field" in obj:
        F = make_field(obj["field"])
    elif field is not None:
        F = field
    else:
        raise InvalidInputError("algebra JSON needs a 'field'")
    if "matrix" in obj:
        return matrix_algebra(F, _int(obj["matrix"], "m"))
    if "group" in obj:
        g = obj["group"]
        if "table" in g:
            return group_ring(F, g["table"])
        if "cyclic" in g:
            return group_ring(F, cyclic_group_table(g["cyclic"]))
        if "symmetric" in g:
            return group_ring(F, symmetric_group_table(g["symmetric"]))
        raise InvalidInputError("group shorthand needs 'table'")
    if "split" in obj:
        return total_split(F, _int(obj["split"], "n"))
    if "truncated" in obj:
        return truncated_polynomial(F, _int(obj["truncated"], "k"))
    if "upper_triangular" in obj:
        return upper_triangular(F, _int(obj["upper_triangular"], "m"))
    if "product" in obj:
        return product(*(algebra_from_json(part, F) for part in obj["product"]))
    try:
        n = obj["dim"]
        entries = obj["c"]
        one = obj["one"]
    except KeyError as exc:
        raise InvalidInputError(f"algebra JSON missing {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError("dim must be a positive integer")
    c = _empty_tensor(F, n)
    for e in entries:
        i, j, k = e["i"], e["j"], e["k"]
        if not all(isinstance(v, int) and 0 <= v < n for v in (i, j, k)):
            raise InvalidInputError(f"structure index out of range: {e}")
        c[i][j][k] = F.decode(e["coef"])
    return AlgebraCtx(F, c, [F.decode(x) for x in one], obj.get("names"), raw=True)


def _int(obj, key):
    v = obj.get(key) if isinstance(obj, dict) else obj
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidInputError(f"expected integer {key!r}")
    return v


def algebra_to_json(A: AlgebraCtx) -> dict:
    F = A.field
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in enumerate(A.structure[i][j]):
                if c != F.zero:
                    entries.append({"i": i, "j": j, "k": k, "coef": F.encode(c)})
    return {
        "field": F.descriptor(),
        "dim": A.dim,
        "one": [F.encode(x) for x in A.one],
        "names": list(A.basis_names),
        "c": entries,
    }


def element_to_json(x: AlgElem) -> list:
    return [x.field.encode(c) for c in x.coords]


__all__ = [
    "AlgebraCtx",
    "AlgElem",
    "IdealBasis",
    "Projection",
    "build_algebra",
    "matrix_algebra",
    "group_ring",
    "combine",
    "product",
    "total_split",
    "truncated_polynomial",
    "dual_numbers",
    "upper_triangular",
    "cyclic_group_table",
    "symmetric_group_table",
    "permutation_group_table",
    "regular_representation",
    "is_unit",
    "inverse",
    "unit_polynomial",
    "jacobson_radical",
    "quotient_by_ideal",
    "algebra_from_json",
    "algebra_to_json",
    "element_to_json",
]
