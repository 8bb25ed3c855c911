"""Sparse multivariate polynomials and combinatorial Nullstellensatz tools."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod

from .errors import FieldMismatchError, InvalidInputError, check_cap
from .field import FieldCtx, FieldElem


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Polynomial in ``nvars`` variables over a field.

    ``terms`` maps exponent tuples to nonzero raw coefficients.  Instances
    are treated as immutable.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldCtx, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        zero = field.zero
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise InvalidInputError(f"bad exponent vector {exp} for {nvars} variables")
            if isinstance(c, FieldElem):
                c = field.convert(c)
            if c != zero:
                clean[exp] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, field, nvars, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c):
        c = field.convert(c)
        return cls._raw(field, nvars, {(0,) * nvars: c} if c != field.zero else {})

    @classmethod
    def variable(cls, field, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(field, nvars, {tuple(exp): field.one})

    @classmethod
    def variables(cls, field, nvars):
        return [cls.variable(field, nvars, i) for i in range(nvars)]

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int):
        return max((e[i] for e in self.terms), default=float("-inf"))

    def coefficient(self, exp) -> FieldElem:
        return self.field.elem(self.terms.get(tuple(exp), self.field.zero))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"X{i + 1}" if e == 1 else f"X{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            cs = F.format(c)
            if not mono:
                parts.append(cs)
            elif c == F.one:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly.constant(self.field, self.nvars, other)
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")
        if other.nvars != self.nvars:
            raise InvalidInputError("polynomials in different numbers of variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = F.add(out.get(exp, F.zero), c)
            if s == F.zero:
                out.pop(exp, None)
            else:
                out[exp] = s
        return MultiPoly._raw(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly._raw(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        out = {}
        zero = F.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, zero), F.mul(c1, c2))
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly._raw(F, self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        c = F.convert(c)
        if c == F.zero:
            return MultiPoly.zero(F, self.nvars)
        return MultiPoly._raw(F, self.nvars, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative polynomial power")
        result = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- operations ---------------------------------------------------------
    def evaluate(self, point):
        """Value at ``point`` (a sequence of FieldElem or raw values)."""
        return self.field.elem(self.evaluate_raw(_raw_point(self, point)))

    def evaluate_raw(self, x):
        F = self.field
        acc = F.zero
        for exp, c in self.terms.items():
            v = c
            for xi, e in zip(x, exp):
                if e:
                    v = F.mul(v, F.pow(xi, e))
            acc = F.add(acc, v)
        return acc


def _raw_point(g: MultiPoly, point):
    if len(point) != g.nvars:
        raise InvalidInputError(f"point has {len(point)} coordinates, polynomial has {g.nvars} variables")
    return [g.field.convert(x) for x in point]


def evaluate(g: MultiPoly, point) -> FieldElem:
    return g.evaluate(point)


def leading_form(g: MultiPoly) -> MultiPoly:
    """Sum of the terms of top total degree (0 for the zero polynomial)."""
    if g.is_zero():
        return g
    d = g.total_degree
    return MultiPoly._raw(g.field, g.nvars, {e: c for e, c in g.terms.items() if sum(e) == d})


# -- grids ----------------------------------------------------------------


@dataclass(frozen=True, init=False)
class GridSpec:
    """Finite sets ``S_1, ..., S_n`` of raw field values, each in given order."""

    field: FieldCtx
    sets: tuple

    def __init__(self, field, sets):
        raw = []
        for i, s in enumerate(sets):
            vals = tuple(field.convert(x) for x in s)
            if len(set(vals)) != len(vals):
                raise InvalidInputError(f"grid set {i + 1} has repeated elements")
            raw.append(vals)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "sets", tuple(raw))

    @property
    def size(self) -> int:
        return prod(len(s) for s in self.sets)

    def points(self):
        return itertools.product(*self.sets)


def _grid(g: MultiPoly, S) -> GridSpec:
    if not isinstance(S, GridSpec):
        S = GridSpec(g.field, S)
    elif S.field != g.field:
        raise FieldMismatchError("grid and polynomial over different fields")
    if len(S.sets) != g.nvars:
        raise InvalidInputError(f"grid has {len(S.sets)} sets, polynomial has {g.nvars} variables")
    return S


def _vanishing_poly(F, s):
    """Coefficients (low-to-high) of prod_{x in s} (X - x)."""
    h = [F.one]
    for x in s:
        nx = F.neg(x)
        out = [F.zero] * (len(h) + 1)
        for k, c in enumerate(h):
            out[k + 1] = F.add(out[k + 1], c)
            out[k] = F.add(out[k], F.mul(nx, c))
        h = out
    return h


def _power_remainders(F, h, top):
    """X^a mod h for a = 0..top, as coefficient lists of length deg h."""
    k = len(h) - 1
    rems = []
    cur = [F.one] + [F.zero] * (k - 1) if k > 0 else []
    for a in range(top + 1):
        if a < k:
            r = [F.zero] * k
            r[a] = F.one
            rems.append(r)
            cur = r
            continue
        # multiply previous remainder by X and reduce the X^k coefficient
        lead = cur[k - 1]
        shifted = [F.zero] + cur[: k - 1]
        if lead != F.zero:
            shifted = [F.sub(c, F.mul(lead, hc)) for c, hc in zip(shifted, h[:k])]
        rems.append(shifted)
        cur = shifted
    return rems


def reduce_mod_grid(g: MultiPoly, S) -> MultiPoly:
    """Remainder of ``g`` modulo ``h_i = prod_{s in S_i} (X_i - s)``.

    Variables are reduced in index order.  The result has degree below
    ``|S_i|`` in every ``X_i`` and agrees with ``g`` on the grid.
    """
    S = _grid(g, S)
    F = g.field
    if any(len(s) == 0 for s in S.sets):
        raise InvalidInputError("grid sets must be nonempty")
    terms = dict(g.terms)
    for i, s in enumerate(S.sets):
        k = len(s)
        top = max((e[i] for e in terms), default=0)
        if top < k:
            continue
        rems = _power_remainders(F, _vanishing_poly(F, s), top)
        out = {}
        for exp, c in terms.items():
            a = exp[i]
            if a < k:
                contrib = [(exp, c)]
            else:
                contrib = []
                for j, rc in enumerate(rems[a]):
                    if rc != F.zero:
                        contrib.append((exp[:i] + (j,) + exp[i + 1:], F.mul(c, rc)))
            for e, v in contrib:
                t = F.add(out.get(e, F.zero), v)
                if t == F.zero:
                    out.pop(e, None)
                else:
                    out[e] = t
        terms = out
    return MultiPoly._raw(F, g.nvars, terms)


@dataclass
class Certificate:
    holds: bool
    reasons: list = field(default_factory=list)


def cn_certify(g: MultiPoly, d, S) -> Certificate:
    """Check the hypotheses of the combinatorial Nullstellensatz for the
    monomial ``X^d`` of ``g`` on the grid ``S``."""
    d = tuple(int(x) for x in d)
    if len(d) != g.nvars:
        raise InvalidInputError("exponent vector length differs from nvars")
    S = _grid(g, S)
    reasons = []
    if g.terms.get(d, g.field.zero) == g.field.zero:
        reasons.append(f"coefficient at X^{list(d)} is zero")
    if sum(d) != g.total_degree:
        reasons.append(f"sum(d) = {sum(d)} differs from total degree {g.total_degree}")
    for i, (di, s) in enumerate(zip(d, S.sets)):
        if len(s) <= di:
            reasons.append(f"|S_{i + 1}| = {len(s)} is not greater than d_{i + 1} = {di}")
    return Certificate(not reasons, reasons)


def cn_witness(g: MultiPoly, S, cap=None):
    """First grid point (lexicographic in the given set orders) where ``g``
    does not vanish, as a tuple of FieldElem; ``None`` if ``g`` vanishes on
    the whole grid."""
    S = _grid(g, S)
    if any(len(s) == 0 for s in S.sets):
        raise InvalidInputError("grid sets must be nonempty")
    check_cap(S.size, cap, "grid scan")
    F = g.field
    if g.is_zero():
        return None
    ev = g.evaluate_raw
    for x in S.points():
        if ev(x) != F.zero:
            return tuple(F.elem(v) for v in x)
    return None


def linear_substitute(g: MultiPoly, B) -> MultiPoly:
    """``g(sum_i X_i B[i][0], ..., sum_i X_i B[i][n-1])``.

    Row-vector convention: ``X_j`` is replaced by the j-th column of ``B``
    paired against the variables, so substituting ``B1 @ B2`` equals
    substituting ``B2`` first and then ``B1``.
    """
    n = g.nvars
    F = g.field
    if len(B) != n or any(len(r) != n for r in B):
        raise InvalidInputError(f"substitution matrix must be {n}x{n}")
    B = [[F.convert(x) for x in row] for row in B]
    forms = []
    for j in range(n):
        t = {}
        for i in range(n):
            if B[i][j] != F.zero:
                exp = [0] * n
                exp[i] = 1
                t[tuple(exp)] = B[i][j]
        forms.append(MultiPoly._raw(F, n, t))
    powers = [{0: MultiPoly.constant(F, n, 1)} for _ in range(n)]

    def power(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = power(j, e - 1) * forms[j]
        return cache[e]

    result = MultiPoly.zero(F, n)
    for exp, c in g.terms.items():
        term = MultiPoly.constant(F, n, F.elem(c))
        for j, e in enumerate(exp):
            if e:
                term = term * power(j, e)
        result = result + term
    return result


def in_D(g: MultiPoly, p: int, m: int) -> bool:
    """Whether ``g`` has a nonzero top-degree term ``X^d`` with every
    ``d_i < p**m``."""
    if g.field.characteristic != p:
        raise InvalidInputError(f"field characteristic {g.field.characteristic} is not {p}")
    if g.is_zero():
        return False
    bound = p**m
    deg = g.total_degree
    return any(sum(e) == deg and all(x < bound for x in e) for e in g.terms)


def poly_from_json(F: FieldCtx, obj) -> MultiPoly:
    if not isinstance(obj, dict) or "nvars" not in obj or "terms" not in obj:
        raise InvalidInputError("polynomial JSON needs 'nvars' and 'terms'")
    n = obj["nvars"]
    if not isinstance(n, int) or n < 0:
        raise InvalidInputError("nvars must be a non-negative integer")
    terms = {}
    for t in obj["terms"]:
        exp = tuple(t["exp"])
        if exp in terms:
            raise InvalidInputError(f"duplicate exponent {list(exp)}")
        terms[exp] = F.decode(t["coef"])
    return MultiPoly(F, n, terms)


def poly_to_json(g: MultiPoly) -> dict:
    return {
        "nvars": g.nvars,
        "terms": [{"exp": list(e), "coef": g.field.encode(c)} for e, c in g.sorted_terms()],
    }
