"""Exact fields: prime fields GF(p), single-level extensions GF(p)[t]/(f), and Q.

Every field exposes two layers.  The *raw* layer (``F.add(a, b)``,
``F.mul(a, b)``, ...) works on canonical internal values and is what the
linear algebra and search kernels use.  The *element* layer wraps a raw
value in :class:`FieldElem` so user code can write ``a * b + 1``.

Raw values:

* prime field: ``int`` in ``[0, p)``
* extension field: ``int`` code ``sum(c_i * p**i)`` of the coefficient
  vector ``(c_0, ..., c_{e-1})``; ``FieldElem.repr`` exposes the vector
* rationals: :class:`fractions.Fraction`

Enumeration order of a finite field is ascending raw value.  For an
extension this is lexicographic on the coefficient vector read from the
top coefficient down, so GF(4) enumerates as ``0, 1, t, t+1``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from .errors import FieldMismatchError, InvalidInputError

_TABLE_LIMIT = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense univariate polynomials over GF(p), coefficient lists low-to-high


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _pmod(f, g, p):
    f = _trim(list(f))
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _trim(f)
    return f


def _psub(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(f, g, p):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _ppowmod(base, k, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while k:
        if k & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        k >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Irreducibility of a monic ``f`` (low-to-high coefficients) over GF(p).

    Degree <= 3: no root in GF(p).  Otherwise gcd(f, t^(p^i) - t) = 1 for
    every 1 <= i <= deg/2.
    """
    f = _trim([c % p for c in f])
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if e <= 3:
        for x in range(p):
            if sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0:
                return False
        return True
    t = [0, 1]
    power = t
    for _ in range(1, e // 2 + 1):
        power = _ppowmod(power, p, f, p)
        g = _pgcd(f, _psub(power, t, p), p)
        if len(g) > 1:
            return False
    return True


def find_irreducible(p: int, e: int) -> list[int]:
    """The first monic irreducible of degree ``e`` over GF(p), scanning the
    lower coefficients in ascending code order."""
    if e < 1:
        raise InvalidInputError("degree must be at least 1")
    for code in range(p**e):
        low = []
        c = code
        for _ in range(e):
            c, d = divmod(c, p)
            low.append(d)
        f = low + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


class FieldCtx:
    """Common interface of the three field kinds."""

    kind: str
    characteristic: int
    cardinality: int | None
    degree: int
    zero: object
    one: object

    # -- element layer ------------------------------------------------------
    def __call__(self, value) -> FieldElem:
        return FieldElem(self, self.convert(value))

    def elem(self, raw) -> FieldElem:
        return FieldElem(self, raw)

    def enumerate(self) -> list[FieldElem]:
        return [FieldElem(self, a) for a in self.elements()]

    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    # -- raw layer shared helpers ------------------------------------------
    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def convert(self, value):
        raise NotImplementedError

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        add, mul = self.add, self.mul
        acc = self.zero
        for x, y in zip(xs, ys):
            if x != self.zero and y != self.zero:
                acc = add(acc, mul(x, y))
        return acc

    def frobenius(self, a, q: int):
        if self.characteristic == 0:
            raise InvalidInputError("Frobenius needs positive characteristic")
        k = q
        while k % self.characteristic == 0:
            k //= self.characteristic
        if k != 1:
            raise InvalidInputError(f"{q} is not a power of {self.characteristic}")
        return self.pow(a, q)

    def random(self, rng: random.Random):
        return self.elements()[rng.randrange(self.cardinality)]

    def elements(self):
        raise InvalidInputError("cannot enumerate an infinite field")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        raise NotImplementedError

    def check_same(self, other: FieldCtx):
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self} vs {other}")


class PrimeField(FieldCtx):
    kind = "prime"
    degree = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise InvalidInputError(f"{p!r} is not prime")
        self.p = p
        self.characteristic = p
        self.cardinality = p
        self.zero = 0
        self.one = 1 % p

    def key(self):
        return ("prime", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def descriptor(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, k: int):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def from_int(self, n: int):
        return n % self.p

    def convert(self, value):
        if isinstance(value, FieldElem):
            self.check_same(value.field)
            return value.raw
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidInputError(f"cannot read {value!r} as an element of {self}")
        return value % self.p

    def elements(self):
        return list(range(self.p))

    def coords(self, a):
        return (a,)

    def from_coords(self, cs):
        return cs[0] % self.p

    def encode(self, a):
        return a

    def decode(self, obj):
        return self.convert(obj)

    def format(self, a) -> str:
        return str(a)

    def repr_of(self, a):
        return a


class ExtensionField(FieldCtx):
    """GF(p)[t]/(f) for a monic irreducible ``f`` given low-to-high."""

    kind = "ext"

    def __init__(self, p: int, modulus):
        if not isinstance(p, int) or not is_prime(p):
            raise InvalidInputError(f"{p!r} is not prime")
        f = [int(c) for c in modulus]
        if len(f) < 2:
            raise InvalidInputError("modulus must have degree at least 1")
        if any(not 0 <= c < p for c in f):
            raise InvalidInputError("modulus coefficients must lie in [0, p)")
        if f[-1] != 1:
            raise InvalidInputError("modulus must be monic")
        if not is_irreducible(f, p):
            raise InvalidInputError(f"modulus {f} is reducible over GF({p})")
        self.p = p
        self.modulus = tuple(f)
        self.degree = len(f) - 1
        self.characteristic = p
        self.cardinality = p**self.degree
        self.zero = 0
        self.one = 1
        self._exp = None
        self._log = None

    def key(self):
        return ("ext", self.p, self.modulus)

    def __repr__(self):
        return f"GF({self.p}^{self.degree}, modulus={list(self.modulus)})"

    def descriptor(self) -> dict:
        return {"kind": "ext", "p": self.p, "modulus": list(self.modulus)}

    # -- code <-> coefficient vector --------------------------------------
    def coords(self, a):
        p = self.p
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, p)
            out.append(d)
        return tuple(out)

    def from_coords(self, cs):
        code = 0
        for c in reversed(list(cs)):
            code = code * self.p + c % self.p
        return code

    repr_of = coords

    # -- arithmetic -------------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        r, m = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            r += (da + db) % p * m
            m *= p
        return r

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        r, m = 0, 1
        while a:
            a, d = divmod(a, p)
            r += (-d) % p * m
            m *= p
        return r

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _slow_mul(self, a, b):
        prod = _pmul(list(self.coords(a)), list(self.coords(b)), self.p)
        rem = _pmod(prod, self.modulus, self.p)
        return self.from_coords(rem)

    def _tables(self):
        if self._exp is None:
            q = self.cardinality
            factors = prime_factors(q - 1)
            gen = None
            for g in range(1, q):
                if all(self._slow_pow(g, (q - 1) // r) != 1 for r in factors):
                    gen = g
                    break
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            x = 1
            for k in range(q - 1):
                exp[k] = x
                log[x] = k
                x = self._slow_mul(x, gen)
            exp[q - 1:] = exp[: q - 1]
            self._log = log
            self._exp = exp
        return self._exp, self._log

    def _slow_pow(self, a, k):
        result = 1
        while k:
            if k & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return result

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.cardinality <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[log[a] + log[b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        q = self.cardinality
        if q <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[(q - 1 - log[a]) % (q - 1)]
        return self._slow_pow(a, q - 2)

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        if a == 0:
            return 1 if k == 0 else 0
        q = self.cardinality
        if q <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[log[a] * k % (q - 1)]
        return self._slow_pow(a, k % (q - 1))

    def from_int(self, n: int):
        return n % self.p

    def convert(self, value):
        if isinstance(value, FieldElem):
            self.check_same(value.field)
            return value.raw
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree or any(isinstance(c, bool) or not isinstance(c, int) for c in value):
                raise InvalidInputError(f"bad coefficient vector {value!r} for {self}")
            return self.from_coords(value)
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidInputError(f"cannot read {value!r} as an element of {self}")
        return value % self.p

    def elements(self):
        return list(range(self.cardinality))

    def encode(self, a):
        return list(self.coords(a))

    def decode(self, obj):
        if not isinstance(obj, list):
            raise InvalidInputError(f"extension elements are coefficient arrays, got {obj!r}")
        return self.convert(obj)

    def format(self, a) -> str:
        cs = self.coords(a)
        parts = []
        for i in range(len(cs) - 1, -1, -1):
            c = cs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts) or "0"

    def generator(self):
        """The class of ``t``."""
        return self.from_coords(_pmod([0, 1], self.modulus, self.p))


class RationalField(FieldCtx):
    kind = "rational"
    characteristic = 0
    cardinality = None
    degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def key(self):
        return ("rational",)

    def __repr__(self):
        return "QQ"

    def descriptor(self) -> dict:
        return {"kind": "rational"}

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def pow(self, a, k: int):
        if k < 0 and a == 0:
            raise ZeroDivisionError("inverse of zero")
        return a**k

    def from_int(self, n: int):
        return Fraction(n)

    def convert(self, value):
        if isinstance(value, FieldElem):
            self.check_same(value.field)
            return value.raw
        if isinstance(value, bool):
            raise InvalidInputError(f"cannot read {value!r} as a rational")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInputError(f"bad rational {value!r}") from exc
        raise InvalidInputError(f"cannot read {value!r} as a rational")

    def coords(self, a):
        return (a,)

    def from_coords(self, cs):
        return Fraction(cs[0])

    def random(self, rng: random.Random):
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

    def encode(self, a):
        return f"{a.numerator}/{a.denominator}"

    def decode(self, obj):
        return self.convert(obj)

    def format(self, a) -> str:
        return str(a)

    def repr_of(self, a):
        return a


class FieldElem:
    """An element of a :class:`FieldCtx` with the usual operators."""

    __slots__ = ("field", "raw")

    def __init__(self, field: FieldCtx, raw):
        self.field = field
        self.raw = raw

    @property
    def repr(self):
        """Canonical representative: int, coefficient tuple, or Fraction."""
        return self.field.repr_of(self.raw)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                self.field.check_same(other.field)
            return other.raw
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        if isinstance(other, Fraction) and self.field.characteristic == 0:
            return other
        return NotImplemented

    def _wrap(self, raw):
        return FieldElem(self.field, raw)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.raw))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.raw, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.raw))

    def __neg__(self):
        return self._wrap(self.field.neg(self.raw))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.raw, k))

    def inv(self) -> FieldElem:
        return self._wrap(self.field.inv(self.raw))

    def frobenius(self, q: int) -> FieldElem:
        return self._wrap(self.field.frobenius(self.raw, q))

    def is_zero(self) -> bool:
        return self.raw == self.field.zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.raw == other.raw
        o = self._other(other)
        return o is not NotImplemented and self.raw == o

    def __hash__(self):
        return hash((self.field.key(), self.raw))

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.raw)})"

    def __str__(self):
        return self.field.format(self.raw)


def make_field(desc) -> FieldCtx:
    """Build a field from a descriptor dict.

    >>> make_field({"kind": "prime", "p": 5}).cardinality
    5
    >>> make_field({"kind": "ext", "p": 2, "modulus": [1, 1, 1]}).cardinality
    4
    """
    if isinstance(desc, FieldCtx):
        return desc
    if not isinstance(desc, dict) or "kind" not in desc:
        raise InvalidInputError(f"field descriptor must be an object with 'kind', got {desc!r}")
    kind = desc["kind"]
    if kind == "prime":
        return PrimeField(desc.get("p"))
    if kind in ("ext", "extension"):
        if "modulus" not in desc:
            raise InvalidInputError("extension descriptor needs 'modulus'")
        return ExtensionField(desc.get("p"), desc["modulus"])
    if kind == "rational":
        return RationalField()
    raise InvalidInputError(f"unknown field kind {kind!r}")


def GF(p: int, e: int = 1) -> FieldCtx:
    """GF(p) or GF(p^e) with the first irreducible modulus of degree ``e``."""
    if e == 1:
        return PrimeField(p)
    if not is_prime(p):
        raise InvalidInputError(f"{p!r} is not prime")
    return ExtensionField(p, find_irreducible(p, e))


QQ = RationalField()
