"""Exact coefficient arithmetic.

A field is a handle object; elements are plain canonical Python values
(ints in [0, p) for a prime field, Fraction for the rationals, tuples of
base-field elements for extensions).  All arithmetic goes through the
handle, which keeps the linear algebra generic while letting prime fields
take a vectorized integer path.

Supported fields:

* ``PrimeField(p)`` -- F_p, p prime, elements are ints.
* ``GoldenExtension(base)`` -- base[u] / (u^2 - u - 1), elements are pairs.
* ``RootExtension(p, m)`` -- an extension of F_p containing a primitive
  m-th root of unity, elements are coefficient tuples.
* ``RationalField()`` -- Q, for small cross-checks only.

Special constants are exposed through ``golden_ratio`` (a root u of
u^2 = u + 1) and ``root_of_unity`` (a primitive m-th root).  Both are
deterministic: prime fields return the smallest witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
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


@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of a coefficient field.

    ``extension`` is "none", "golden" or "zeta"; the latter carries the
    root order in ``zeta_order``.  ``p == 0`` selects the rationals.
    """

    p: int
    extension: str = "none"
    zeta_order: int | None = None
    seed: int = 0

    def to_json(self) -> dict:
        ext: object = self.extension
        if self.extension == "zeta":
            ext = {"zeta": self.zeta_order}
        return {"p": self.p, "extension": ext, "seed": self.seed}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        ext = obj.get("extension", "none")
        zorder = None
        if isinstance(ext, dict):
            zorder = int(ext["zeta"])
            ext = "zeta"
        elif ext not in ("none", "golden"):
            raise FieldError(f"unknown extension descriptor {ext!r}")
        return FieldSpec(int(obj["p"]), ext, zorder, int(obj.get("seed", 0)))


class Field:
    """Base handle.  Subclasses define zero/one and the five core ops."""

    modulus: int | None = None  # set when elements are ints mod p (fast path)
    char: int = 0
    spec: FieldSpec

    # -- core ops supplied by subclasses: add, sub, mul, neg, inv, element --

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, xs):
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out

    def dot(self, xs, ys):
        out = self.zero
        for x, y in zip(xs, ys):
            out = self.add(out, self.mul(x, y))
        return out

    # -- randomness: always from an explicit generator --

    def rng(self, seed, purpose: str = "") -> random.Random:
        return random.Random(f"uxh:{purpose}:{self.spec.p}:{seed}")

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random):
        while True:
            x = self.random_element(rng)
            if not self.is_zero(x):
                return x

    def random_point(self, rng: random.Random, nvars: int) -> tuple:
        """Random projective point in the affine chart (.., 1)."""
        return tuple(self.random_element(rng) for _ in range(nvars - 1)) + (self.one,)

    # -- constants --

    def golden_ratio(self):
        raise FieldError(f"{self.describe()} carries no golden ratio")

    def root_of_unity(self, m: int):
        raise FieldError(f"{self.describe()} carries no root of unity of order {m}")

    # -- serialization --

    def fmt(self, a) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        return parse_element(self, s)

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.describe()}>"


class PrimeField(Field):
    """F_p with int elements in [0, p)."""

    def __init__(self, p: int, seed: int = 0, extension: str = "none",
                 zeta_order: int | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        if p < (1 << 20):  # keeps products inside int64 for the numpy path
            self.modulus = p
        self.zero = 0
        self.one = 1 % p
        self.spec = FieldSpec(p, extension, zeta_order, seed)
        self._golden = -1
        self._roots: dict[int, int] = {}

    def element(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, k: int):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random_element(self, rng):
        return rng.randrange(self.p)

    def golden_ratio(self) -> int:
        """Smallest root of u^2 = u + 1 in F_p, if one exists."""
        if self._golden < 0:
            for u in range(self.p):
                if (u * u - u - 1) % self.p == 0:
                    self._golden = u
                    break
            else:
                raise FieldError(
                    f"u^2 = u + 1 has no root in F_{self.p}; "
                    f"use a golden extension or a prime with p = +/-1 mod 5")
        return self._golden

    def root_of_unity(self, m: int) -> int:
        """Smallest element of multiplicative order exactly m."""
        if m == 1:
            return self.one
        if m in self._roots:
            return self._roots[m]
        if (self.p - 1) % m != 0:
            raise FieldError(
                f"F_{self.p} has no root of unity of order {m} "
                f"(needs p = 1 mod {m}); use a root extension")
        qs = prime_factors(m)
        for x in range(2, self.p):
            if pow(x, m, self.p) == 1 and all(pow(x, m // q, self.p) != 1 for q in qs):
                self._roots[m] = x
                return x
        raise FieldError(f"no order-{m} element found in F_{self.p}")  # unreachable

    def fmt(self, a) -> str:
        return str(a % self.p)

    def describe(self) -> str:
        return f"F_{self.p}"


class RationalField(Field):
    """Q with Fraction elements.  Cross-check oracle for small instances."""

    char = 0

    def __init__(self, seed: int = 0):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.spec = FieldSpec(0, "none", None, seed)

    def element(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return 1 / a

    def random_element(self, rng):
        return Fraction(rng.randrange(-50, 51))

    def root_of_unity(self, m: int):
        if m == 1:
            return self.one
        if m == 2:
            return Fraction(-1)
        raise FieldError(f"Q has no root of unity of order {m}")

    def fmt(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return "Q"


class GoldenExtension(Field):
    """base[u]/(u^2 - u - 1); elements are pairs (a, b) meaning a + b*u.

    Requires u^2 - u - 1 irreducible over the base (over a prime field:
    p = +/-2 mod 5, or p = 2); otherwise the golden ratio already lives in
    the base and no extension is wanted.
    """

    def __init__(self, base: Field, seed: int = 0):
        self.base = base
        self.char = base.char
        if isinstance(base, PrimeField):
            try:
                base.golden_ratio()
            except FieldError:
                pass
            else:
                raise FieldError(
                    f"u^2 - u - 1 splits over {base.describe()}; "
                    "the golden ratio needs no extension there")
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        self.spec = FieldSpec(base.spec.p, "golden", None, seed)

    def element(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (self.base.element(x[0]), self.base.element(x[1]))
        if isinstance(x, str):
            return self.parse(x)
        return (self.base.element(x), self.base.zero)

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def sub(self, a, b):
        return (self.base.sub(a[0], b[0]), self.base.sub(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        # (a0 + a1 u)(b0 + b1 u), u^2 = u + 1
        f = self.base
        cross = f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0]))
        uu = f.mul(a[1], b[1])
        return (f.add(f.mul(a[0], b[0]), uu), f.add(cross, uu))

    def inv(self, a):
        # conjugate is a0 + a1 - a1 u; norm = a0^2 + a0 a1 - a1^2
        f = self.base
        if a == self.zero:
            raise ZeroDivisionError("0 is not invertible")
        norm = f.sub(f.add(f.mul(a[0], a[0]), f.mul(a[0], a[1])), f.mul(a[1], a[1]))
        ninv = f.inv(norm)
        return (f.mul(f.add(a[0], a[1]), ninv), f.mul(f.neg(a[1]), ninv))

    def random_element(self, rng):
        return (self.base.random_element(rng), self.base.random_element(rng))

    def golden_ratio(self):
        return (self.base.zero, self.base.one)

    def root_of_unity(self, m: int):
        if m == 1:
            return self.one
        if m == 2 and self.char != 2:
            return self.neg(self.one)
        if isinstance(self.base, PrimeField):
            order = self.base.p * self.base.p - 1
            return _root_by_group_order(self, order, m)
        raise FieldError(f"no root of unity of order {m} here")

    def fmt(self, a) -> str:
        f = self.base
        if a[1] == f.zero:
            return f.fmt(a[0])
        ut = "u" if a[1] == f.one else f"{f.fmt(a[1])}*u"
        if a[0] == f.zero:
            return ut
        return f"{f.fmt(a[0])}+{ut}"

    def describe(self) -> str:
        return f"{self.base.describe()}[u]"


# -- dense polynomial helpers over F_p, for the root extension --

def _pp_trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v

def _pp_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(out)

def _pp_divmod(a, b, p):
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * binv % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return q, _pp_trim(a)

def _pp_powmod(a, k, mod, p):
    out = [1]
    base = _pp_divmod(a, mod, p)[1]
    while k:
        if k & 1:
            out = _pp_divmod(_pp_mul(out, base, p), mod, p)[1]
        base = _pp_divmod(_pp_mul(base, base, p), mod, p)[1]
        k >>= 1
    return out

def _pp_gcd(a, b, p):
    while b:
        a, b = b, _pp_divmod(a, b, p)[1]
    return a

def _pp_invmod(a, mod, p):
    # extended Euclid in F_p[x]
    r0, r1 = list(mod), _pp_divmod(a, mod, p)[1]
    t0, t1 = [], [1]
    while r1:
        q, r = _pp_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _pp_trim([(x - y) % p for x, y in
                               zip(_pp_mul(q, t1, p) + [0] * len(t0),
                                   t0 + [0] * len(_pp_mul(q, t1, p)))] or [0])
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible")
    c = pow(r0[0], p - 2, p)
    return [x * c % p for x in t0]

def _pp_is_irreducible(f, p):
    """Rabin test: x^(p^k) = x mod f and gcd(x^(p^(k/q)) - x, f) = 1."""
    k = len(f) - 1
    x = [0, 1]
    xq = _pp_powmod(x, p ** k, f, p)
    diff = _pp_trim([(a - b) % p for a, b in zip(xq + [0] * 2, x + [0] * len(xq))])
    if diff:
        return False
    for q in prime_factors(k):
        xq = _pp_powmod(x, p ** (k // q), f, p)
        diff = _pp_trim([(a - b) % p for a, b in zip(xq + [0] * 2, x + [0] * len(xq))])
        if len(_pp_gcd(f, diff, p)) != 1:
            return False
    return True


class RootExtension(Field):
    """Extension of F_p generated by a primitive m-th root of unity.

    Degree is the multiplicative order k of p mod m; elements are length-k
    coefficient tuples over a deterministic irreducible modulus.
    """

    def __init__(self, p: int, m: int, seed: int = 0):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if m < 1 or m % p == 0:
            raise FieldError(f"order {m} invalid in characteristic {p}")
        self.p = p
        self.m = m
        self.char = p
        k = 1
        acc = p % m
        while acc != 1:
            acc = acc * p % m
            k += 1
        if k == 1:
            raise FieldError(f"F_{p} already contains an order-{m} root; "
                             "no extension is wanted")
        self.k = k
        rng = random.Random(f"uxh:rootext:{p}:{m}")
        while True:
            f = [rng.randrange(p) for _ in range(k)] + [1]
            if _pp_is_irreducible(f, p):
                break
        self.modpoly = f
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.spec = FieldSpec(p, "zeta", m, seed)
        order = p ** k - 1
        self._zeta = _root_by_group_order(self, order, m, rng)

    def element(self, x):
        if isinstance(x, tuple) and len(x) == self.k:
            return tuple(c % self.p for c in x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return (x % self.p,) + (0,) * (self.k - 1)
        raise FieldError(f"cannot coerce {x!r} into {self.describe()}")

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        prod = _pp_mul(list(a), list(b), self.p)
        rem = _pp_divmod(prod, self.modpoly, self.p)[1]
        return tuple(rem + [0] * (self.k - len(rem)))

    def inv(self, a):
        if all(c == 0 for c in a):
            raise ZeroDivisionError("0 is not invertible")
        v = _pp_invmod(list(a), self.modpoly, self.p)
        v = _pp_divmod(v, self.modpoly, self.p)[1]
        return tuple(v + [0] * (self.k - len(v)))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def root_of_unity(self, mm: int):
        if mm == 1:
            return self.one
        if self.m % mm == 0:
            return self.pow(self._zeta, self.m // mm)
        raise FieldError(f"{self.describe()} was built for order {self.m}, "
                         f"not {mm}")

    def fmt(self, a) -> str:
        parts = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                zt = "z" if i == 1 else f"z^{i}"
                parts.append(zt if c == 1 else f"{c}*{zt}")
        return "+".join(parts) if parts else "0"

    def describe(self) -> str:
        return f"F_{self.p}^{self.k}(zeta_{self.m})"


def _root_by_group_order(field: Field, order: int, m: int, rng=None):
    """Element of exact multiplicative order m in a group of known order."""
    if order % m != 0:
        raise FieldError(f"{field.describe()} has no root of unity of order {m}")
    qs = prime_factors(m)
    rng = rng or random.Random(f"uxh:root:{field.spec.p}:{m}")
    for _ in range(400):
        r = field.random_nonzero(rng)
        s = field.pow(r, order // m)
        if field.pow(s, m) == field.one and \
                all(field.pow(s, m // q) != field.one for q in qs):
            return s
    raise FieldError(f"failed to locate an order-{m} root in {field.describe()}")


def make_field(spec: FieldSpec) -> Field:
    """Build the smallest field satisfying the spec's constant requirements.

    ``extension: "golden"`` guarantees golden_ratio() succeeds: F_p itself
    when u^2 - u - 1 splits, else its quadratic extension.  Likewise
    ``"zeta"`` guarantees a primitive root of order ``zeta_order``.
    """
    if spec.p == 0:
        if spec.extension != "none":
            raise FieldError("extensions of Q are not supported")
        return RationalField(seed=spec.seed)
    if spec.extension == "none":
        return PrimeField(spec.p, seed=spec.seed)
    if spec.extension == "golden":
        base = PrimeField(spec.p, seed=spec.seed, extension="golden")
        try:
            base.golden_ratio()
            return base
        except FieldError:
            return GoldenExtension(PrimeField(spec.p), seed=spec.seed)
    if spec.extension == "zeta":
        m = spec.zeta_order
        if m is None:
            raise FieldError("zeta extension needs an order")
        base = PrimeField(spec.p, seed=spec.seed, extension="zeta", zeta_order=m)
        if (spec.p - 1) % m == 0:
            return base
        return RootExtension(spec.p, m, seed=spec.seed)
    raise FieldError(f"unknown extension {spec.extension!r}")


def golden_conjugate(field: Field):
    """The other root 1 - u of u^2 = u + 1."""
    return field.sub(field.one, field.golden_ratio())


def default_field_specs(golden: bool = False, zeta_order: int | None = None,
                        count: int = 2, min_p: int = 10007,
                        seed: int = 0) -> list[FieldSpec]:
    """First ``count`` primes >= min_p whose F_p carries the requested
    constants directly (no extension)."""
    out = []
    p = min_p
    while len(out) < count:
        ok = is_prime(p)
        if ok and golden:
            ok = p % 5 in (1, 4)
        if ok and zeta_order:
            ok = (p - 1) % zeta_order == 0
        if ok:
            ext = "golden" if golden else ("zeta" if zeta_order else "none")
            out.append(FieldSpec(p, ext, zeta_order if zeta_order else None, seed))
        p += 1
    return out


# -- parsing ----------------------------------------------------------------

def parse_element(field: Field, s: str):
    """Parse a field-expression string.

    Grammar: sum of terms; term = signed product of factors; factor is an
    integer literal, ``a/b`` over Q, ``u`` (golden ratio) or ``z``/``zeta``
    (designated root of unity), each with an optional ``^k``.
    """
    s = "".join(s.split())
    if not s:
        raise FieldError("empty field expression")
    pos = 0
    total = field.zero
    sign = 1
    if s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    while True:
        val, pos = _parse_term(field, s, pos)
        total = field.add(total, field.neg(val) if sign < 0 else val)
        if pos >= len(s):
            return total
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise FieldError(f"unexpected {s[pos]!r} in {s!r}")
        pos += 1


def _parse_term(field, s, pos):
    val, pos = _parse_factor(field, s, pos)
    while pos < len(s) and s[pos] in "*/":
        op = s[pos]
        f, pos = _parse_factor(field, s, pos + 1)
        val = field.mul(val, f) if op == "*" else field.div(val, f)
    return val, pos


def _parse_factor(field, s, pos):
    if pos >= len(s):
        raise FieldError(f"truncated field expression {s!r}")
    if s[pos].isdigit():
        j = pos
        while j < len(s) and s[j].isdigit():
            j += 1
        base = field.element(int(s[pos:j]))
        pos = j
    elif s.startswith("zeta", pos) or s[pos] == "z":
        pos += 4 if s.startswith("zeta", pos) else 1
        m = getattr(field, "m", None) or field.spec.zeta_order
        if m is None:
            raise FieldError(
                "expression uses 'zeta' but the field spec declares no root "
                "order; add an extension entry like {\"zeta\": 4}")
        base = field.root_of_unity(m)
    elif s[pos] == "u":
        pos += 1
        base = field.golden_ratio()
    else:
        raise FieldError(f"unexpected {s[pos]!r} in field expression {s!r}")
    if pos < len(s) and s[pos] == "^":
        j = pos + 1
        if j < len(s) and s[j] == "-":
            j += 1
        while j < len(s) and s[j].isdigit():
            j += 1
        base = field.pow(base, int(s[pos + 1:j]))
        pos = j
    return base, pos
