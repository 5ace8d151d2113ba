"""Sparse multivariate polynomials and bihomogeneous forms over exact fields.

Polynomials are dicts from exponent tuples to field elements, with zero
coefficients never stored.  The monomial order used everywhere (coefficient
vectors, kernels, serialization) is graded lexicographic: within one degree,
exponent tuples sorted descending lexicographically.

A BihomForm keeps two variable sets of the same length, a parameter set
(printed a, b, c, d) and a coordinate set (printed x, y, z, w), and is
homogeneous in each separately.  Derivatives are true partials, so the
characteristic must exceed the degrees in play; callers enforce that.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .field import Field, FieldError, parse_element


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple:
    """All exponent tuples of total degree d, graded-lex descending."""
    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    if nvars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def mono_index(nvars: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


def default_names(nvars: int, side: str = "x") -> tuple:
    base = ("a", "b", "c", "d") if side == "a" else ("x", "y", "z", "w")
    if nvars <= 4:
        return base[:nvars]
    return tuple(f"{side}{i}" for i in range(nvars))


def _falling(e: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= e - i
    return out


class MultiPoly:
    """Sparse exact polynomial in nvars variables."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field: Field, nvars: int, coeffs=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if coeffs:
            for exps, c in coeffs.items():
                if not field.is_zero(c):
                    clean[tuple(exps)] = c
        self.coeffs = clean

    @staticmethod
    def zero(field: Field, nvars: int) -> "MultiPoly":
        return MultiPoly(field, nvars)

    @staticmethod
    def constant(field: Field, nvars: int, c) -> "MultiPoly":
        return MultiPoly(field, nvars, {(0,) * nvars: field.element(c)})

    @staticmethod
    def variable(field: Field, nvars: int, i: int) -> "MultiPoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return MultiPoly(field, nvars, {exps: field.element(1)})

    @staticmethod
    def monomial(field: Field, nvars: int, exps, coeff=1) -> "MultiPoly":
        return MultiPoly(field, nvars, {tuple(exps): field.element(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self):
        if not self.coeffs:
            return None
        return max(sum(e) for e in self.coeffs)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.coeffs}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Degree if homogeneous and nonzero, else None."""
        degs = {sum(e) for e in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        fld = self.field
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            s = fld.add(out.get(exps, fld.element(0)), c)
            if fld.is_zero(s):
                out.pop(exps, None)
            else:
                out[exps] = s
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = out
        return res

    def __neg__(self) -> "MultiPoly":
        fld = self.field
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = {e: fld.neg(c) for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        fld = self.field
        c = fld.element(c)
        if fld.is_zero(c):
            return MultiPoly.zero(fld, self.nvars)
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = {e: fld.mul(v, c) for e, v in self.coeffs.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        fld = self.field
        out = {}
        zero = fld.element(0)
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                s = fld.add(out.get(e, zero), fld.mul(ca, cb))
                if fld.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = out
        return res

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        res = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base if k > 1 else base
            k >>= 1
        return res

    def evaluate(self, point):
        fld = self.field
        pows = [{0: fld.element(1)} for _ in range(self.nvars)]
        total = fld.element(0)
        for exps, c in self.coeffs.items():
            v = c
            for i, e in enumerate(exps):
                if e:
                    cache = pows[i]
                    if e not in cache:
                        cache[e] = fld.pow(fld.element(point[i]), e)
                    v = fld.mul(v, cache[e])
            total = fld.add(total, v)
        return total

    def partial(self, i: int) -> "MultiPoly":
        fld = self.field
        out = {}
        for exps, c in self.coeffs.items():
            e = exps[i]
            if e == 0:
                continue
            v = fld.mul(c, fld.element(e))
            if not fld.is_zero(v):
                out[exps[:i] + (e - 1,) + exps[i + 1:]] = v
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = out
        return res

    def coeff_vector(self, d: int) -> list:
        """Coefficients over monomials(nvars, d); requires homogeneity."""
        fld = self.field
        idx = mono_index(self.nvars, d)
        vec = [fld.element(0)] * len(idx)
        for exps, c in self.coeffs.items():
            if sum(exps) != d:
                raise ValueError("polynomial not homogeneous of the requested degree")
            vec[idx[exps]] = c
        return vec

    @staticmethod
    def from_coeff_vector(field: Field, nvars: int, d: int, vec) -> "MultiPoly":
        monos = monomials(nvars, d)
        if len(vec) != len(monos):
            raise ValueError("coefficient vector length mismatch")
        return MultiPoly(field, nvars, dict(zip(monos, map(field.element, vec))))

    def substitute(self, forms: list) -> "MultiPoly":
        """Plug forms[i] in for variable i; forms share one degree."""
        if len(forms) != self.nvars:
            raise ValueError("need one form per variable")
        degs = {g.homogeneous_degree() for g in forms if not g.is_zero()}
        if len(degs) > 1:
            raise ValueError("substituted forms must share a common degree")
        if not forms:
            raise ValueError("empty substitution")
        for g in forms:
            if not g.is_zero() and g.homogeneous_degree() is None:
                raise ValueError("substituted forms must be homogeneous")
        target_vars = forms[0].nvars
        fld = self.field
        pow_cache = {}

        def fpow(i, k):
            key = (i, k)
            if key not in pow_cache:
                pow_cache[key] = forms[i] ** k
            return pow_cache[key]

        total = MultiPoly.zero(fld, target_vars)
        for exps, c in self.coeffs.items():
            term = MultiPoly.constant(fld, target_vars, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * fpow(i, e)
            total = total + term
        return total

    def __repr__(self):
        return f"MultiPoly({poly_to_text(self)})"


def derivative(f: MultiPoly, gamma) -> MultiPoly:
    """Iterated true partial with multinomial factors folded in."""
    fld = f.field
    out = {}
    for exps, c in f.coeffs.items():
        factor = 1
        ne = []
        for e, g in zip(exps, gamma):
            if e < g:
                factor = 0
                break
            factor *= _falling(e, g)
            ne.append(e - g)
        if factor == 0:
            continue
        v = fld.mul(c, fld.element(factor))
        if not fld.is_zero(v):
            out[tuple(ne)] = v
    res = MultiPoly.zero(fld, f.nvars)
    res.coeffs = out
    return res


def derivative_orders(nvars: int, order: int) -> list:
    """All multi-indices of total order <= order - 1, graded-lex."""
    out = []
    for k in range(max(order, 0)):
        out.extend(monomials(nvars, k))
    return out


def partial_derivatives_up_to(f: MultiPoly, order: int) -> list:
    """The multiplicity-`order` condition set: partials of order <= order-1."""
    return [derivative(f, g) for g in derivative_orders(f.nvars, order)]


def _local_expansion(f: MultiPoly, point) -> MultiPoly:
    """f in the affine chart at the point, shifted so the point is the origin.

    Chart index j is the largest coordinate with a nonzero value; returns a
    polynomial in the remaining slots (slot j stays unused).
    """
    fld = f.field
    pt = [fld.element(v) for v in point]
    j = max((i for i, v in enumerate(pt) if not fld.is_zero(v)), default=None)
    if j is None:
        raise ValueError("invalid projective point: all coordinates zero")
    inv = fld.inv(pt[j])
    q = [fld.mul(v, inv) for v in pt]
    shifted = [MultiPoly(fld, f.nvars, {
        tuple(1 if k == i else 0 for k in range(f.nvars)): fld.element(1),
        (0,) * f.nvars: q[i]}) for i in range(f.nvars)]
    pow_cache = {}

    def spow(i, k):
        key = (i, k)
        if key not in pow_cache:
            pow_cache[key] = shifted[i] ** k
        return pow_cache[key]

    total = MultiPoly.zero(fld, f.nvars)
    for exps, c in f.coeffs.items():
        term = MultiPoly.constant(fld, f.nvars, c)
        for i, e in enumerate(exps):
            if e == 0 or i == j:
                continue
            term = term * spow(i, e)
        total = total + term
    return total


def multiplicity_at(f: MultiPoly, point) -> int:
    """Smallest order of a nonvanishing partial at the point."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    g = _local_expansion(f, point)
    return min(sum(e) for e in g.coeffs)


def tangent_cone(f: MultiPoly, point):
    """Lowest local part at the point, re-homogenized; returns (cone, mult).

    The cone comes back as a homogeneous polynomial in the original
    variables, comparable across the two specializations of a bihomogeneous
    form only up to a scalar.
    """
    if f.is_zero():
        raise ValueError("tangent cone of the zero polynomial is undefined")
    if not f.is_homogeneous():
        raise ValueError("tangent cone expects a homogeneous polynomial")
    fld = f.field
    g = _local_expansion(f, point)
    mult = min(sum(e) for e in g.coeffs)
    lowest = MultiPoly(fld, f.nvars,
                       {e: c for e, c in g.coeffs.items() if sum(e) == mult})
    pt = [fld.element(v) for v in point]
    j = max(i for i, v in enumerate(pt) if not fld.is_zero(v))
    inv = fld.inv(pt[j])
    q = [fld.mul(v, inv) for v in pt]
    backs = []
    for i in range(f.nvars):
        coeffs = {tuple(1 if k == i else 0 for k in range(f.nvars)): fld.element(1)}
        if not fld.is_zero(q[i]):
            ej = tuple(1 if k == j else 0 for k in range(f.nvars))
            coeffs[ej] = fld.neg(q[i])
        backs.append(MultiPoly(fld, f.nvars, coeffs))
    cone = lowest.substitute(backs)
    return cone, mult


def proportional(f, g) -> bool:
    """True when f = c*g for some nonzero scalar c (also for BihomForm)."""
    if f.coeffs.keys() != g.coeffs.keys():
        return False
    if not f.coeffs:
        return True
    fld = f.field
    key = next(iter(f.coeffs))
    c = fld.div(f.coeffs[key], g.coeffs[key])
    return all(fld.is_zero(fld.sub(v, fld.mul(c, g.coeffs[e])))
               for e, v in f.coeffs.items())


class BihomForm:
    """Polynomial in two variable sets, homogeneous in each separately.

    coeffs maps (a_exponents, x_exponents) pairs to field elements; the
    bidegree (t, d) is fixed at construction.
    """

    __slots__ = ("field", "nvars", "bidegree", "coeffs")

    def __init__(self, field: Field, nvars: int, bidegree, coeffs=None):
        self.field = field
        self.nvars = nvars
        self.bidegree = (int(bidegree[0]), int(bidegree[1]))
        t, d = self.bidegree
        clean = {}
        if coeffs:
            for (ea, ex), c in coeffs.items():
                ea, ex = tuple(ea), tuple(ex)
                if sum(ea) != t or sum(ex) != d:
                    raise ValueError("term violates the declared bidegree")
                if not field.is_zero(c):
                    clean[(ea, ex)] = c
        self.coeffs = clean

    @staticmethod
    def zero(field: Field, nvars: int, bidegree) -> "BihomForm":
        return BihomForm(field, nvars, bidegree)

    @staticmethod
    def from_pairs(field: Field, nvars: int, pairs) -> "BihomForm":
        """Sum of h(a) * g(x) products; pairs = [(h, g), ...]."""
        t = d = None
        for h, g in pairs:
            if not h.is_zero() and not g.is_zero():
                t, d = h.homogeneous_degree(), g.homogeneous_degree()
                break
        if t is None:
            raise ValueError("all products vanish, bidegree undetermined")
        out = BihomForm(field, nvars, (t, d))
        zero = field.element(0)
        coeffs = {}
        for h, g in pairs:
            if h.is_zero() or g.is_zero():
                continue
            if h.homogeneous_degree() != t or g.homogeneous_degree() != d:
                raise ValueError("mixed bidegrees in the product list")
            for ea, ca in h.coeffs.items():
                for ex, cx in g.coeffs.items():
                    key = (ea, ex)
                    s = field.add(coeffs.get(key, zero), field.mul(ca, cx))
                    if field.is_zero(s):
                        coeffs.pop(key, None)
                    else:
                        coeffs[key] = s
        out.coeffs = coeffs
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, BihomForm) and self.nvars == other.nvars
                and self.bidegree == other.bidegree and self.coeffs == other.coeffs)

    def __add__(self, other: "BihomForm") -> "BihomForm":
        if self.bidegree != other.bidegree:
            raise ValueError("bidegree mismatch")
        fld = self.field
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = fld.add(out.get(key, fld.element(0)), c)
            if fld.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        res = BihomForm(fld, self.nvars, self.bidegree)
        res.coeffs = out
        return res

    def scale(self, c) -> "BihomForm":
        fld = self.field
        c = fld.element(c)
        res = BihomForm(fld, self.nvars, self.bidegree)
        if not fld.is_zero(c):
            res.coeffs = {k: fld.mul(v, c) for k, v in self.coeffs.items()}
        return res

    def specialize(self, side: str, point) -> MultiPoly:
        """Plug a point into one side; returns a polynomial in the other."""
        fld = self.field
        pt = [fld.element(v) for v in point]
        if len(pt) != self.nvars:
            raise ValueError("point length mismatch")
        if all(fld.is_zero(v) for v in pt):
            raise ValueError("invalid projective point: all coordinates zero")
        if side not in ("a", "x"):
            raise ValueError("side must be 'a' or 'x'")
        pows = [{0: fld.element(1)} for _ in range(self.nvars)]

        def ppow(i, e):
            cache = pows[i]
            if e not in cache:
                cache[e] = fld.pow(pt[i], e)
            return cache[e]

        out = {}
        zero = fld.element(0)
        for (ea, ex), c in self.coeffs.items():
            plug, keep = (ea, ex) if side == "a" else (ex, ea)
            v = c
            for i, e in enumerate(plug):
                if e:
                    v = fld.mul(v, ppow(i, e))
            if fld.is_zero(v):
                continue
            s = fld.add(out.get(keep, zero), v)
            if fld.is_zero(s):
                out.pop(keep, None)
            else:
                out[keep] = s
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = out
        return res

    def collapse(self) -> MultiPoly:
        """Identify x with a; returns a polynomial of degree t + d in a."""
        fld = self.field
        out = {}
        zero = fld.element(0)
        for (ea, ex), c in self.coeffs.items():
            key = tuple(i + j for i, j in zip(ea, ex))
            s = fld.add(out.get(key, zero), c)
            if fld.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        res = MultiPoly.zero(fld, self.nvars)
        res.coeffs = out
        return res

    def x_partial(self, i: int) -> "BihomForm":
        fld = self.field
        t, d = self.bidegree
        res = BihomForm(fld, self.nvars, (t, d - 1))
        out = {}
        for (ea, ex), c in self.coeffs.items():
            e = ex[i]
            if e == 0:
                continue
            v = fld.mul(c, fld.element(e))
            if fld.is_zero(v):
                continue
            out[(ea, ex[:i] + (e - 1,) + ex[i + 1:])] = v
        res.coeffs = out
        return res

    def x_derivative(self, gamma) -> "BihomForm":
        fld = self.field
        t, d = self.bidegree
        res = BihomForm(fld, self.nvars, (t, d - sum(gamma)))
        out = {}
        for (ea, ex), c in self.coeffs.items():
            factor = 1
            ne = []
            for e, g in zip(ex, gamma):
                if e < g:
                    factor = 0
                    break
                factor *= _falling(e, g)
                ne.append(e - g)
            if factor == 0:
                continue
            v = fld.mul(c, fld.element(factor))
            if not fld.is_zero(v):
                out[(ea, tuple(ne))] = v
        res.coeffs = out
        return res

    def evaluate(self, apoint, xpoint):
        return self.specialize("a", apoint).evaluate(xpoint)

    def x_slices(self) -> dict:
        """Map x-monomial -> coefficient polynomial in the a variables."""
        fld = self.field
        slices = {}
        for (ea, ex), c in self.coeffs.items():
            slices.setdefault(ex, {})[ea] = c
        return {ex: MultiPoly(fld, self.nvars, d) for ex, d in slices.items()}

    def a_slices(self) -> dict:
        fld = self.field
        slices = {}
        for (ea, ex), c in self.coeffs.items():
            slices.setdefault(ea, {})[ex] = c
        return {ea: MultiPoly(fld, self.nvars, d) for ea, d in slices.items()}

    def normalized(self) -> "BihomForm":
        """Scale so the leading term (graded-lex on (a, x) pairs) is 1."""
        if not self.coeffs:
            return self
        lead = max(self.coeffs)
        return self.scale(self.field.inv(self.coeffs[lead]))

    def __repr__(self):
        t, d = self.bidegree
        return f"BihomForm(bidegree=({t},{d}), terms={len(self.coeffs)})"


def coefficient_count(nvars: int, d: int) -> int:
    return comb(nvars - 1 + d, nvars - 1)


def _mono_text(exps, names) -> str:
    pieces = [f"{names[i]}^{e}" for i, e in enumerate(exps) if e]
    return "*".join(pieces) if pieces else "1"


def _coef_text(field: Field, c) -> str:
    s = field.fmt(c)
    if any(op in s for op in "+-*/") or " " in s:
        return f"({s})"
    return s


def poly_to_text(f: MultiPoly, names=None) -> str:
    if names is None:
        names = default_names(f.nvars)
    if not f.coeffs:
        return "0"
    parts = []
    for exps in sorted(f.coeffs, key=lambda e: (sum(e), e), reverse=True):
        c = f.coeffs[exps]
        mono = _mono_text(exps, names)
        ct = _coef_text(f.field, c)
        if mono == "1":
            parts.append(ct)
        elif ct == "1":
            parts.append(mono)
        else:
            parts.append(f"{ct}*{mono}")
    return " + ".join(parts)


def bihom_to_text(F: BihomForm, anames=None, xnames=None) -> str:
    if anames is None:
        anames = default_names(F.nvars, "a")
    if xnames is None:
        xnames = default_names(F.nvars, "x")
    if not F.coeffs:
        return "0"
    parts = []
    for (ea, ex) in sorted(F.coeffs, reverse=True):
        c = F.coeffs[(ea, ex)]
        ct = _coef_text(F.field, c)
        amono = _mono_text(ea, anames)
        xmono = _mono_text(ex, xnames)
        left = amono if ct == "1" and amono != "1" else (
            ct if amono == "1" else f"{ct}*{amono}")
        parts.append(f"{left} ⊗ {xmono}")
    return " + ".join(parts)


class _PolyParser:
    """Sum-of-terms grammar: term = [sign] factor (*|/ factor)*; a factor is
    an integer, u, zeta[^k], a variable[^k], or a parenthesized field literal.
    """

    def __init__(self, field: Field, names):
        self.field = field
        self.names = sorted(names, key=len, reverse=True)
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)

    def parse(self, text: str) -> MultiPoly:
        terms = self.split_terms(text)
        total = MultiPoly.zero(self.field, self.nvars)
        for sign, term in terms:
            total = total + self.parse_term(term).scale(sign)
        return total

    @staticmethod
    def split_terms(text: str):
        """Split on top-level +/- into (sign, term) pairs."""
        terms = []
        depth = 0
        sign, cur = 1, []
        for ch in text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if depth == 0 and ch in "+-":
                body = "".join(cur).strip()
                if body:
                    terms.append((sign, body))
                    sign = 1 if ch == "+" else -1
                else:
                    sign = sign if ch == "+" else -sign
                cur = []
                continue
            cur.append(ch)
        tail = "".join(cur).strip()
        if tail:
            terms.append((sign, tail))
        elif not terms:
            raise FieldError("empty polynomial text")
        return terms

    def parse_term(self, term: str) -> MultiPoly:
        fld = self.field
        s = term.replace(" ", "")
        pos = 0
        poly = MultiPoly.constant(fld, self.nvars, 1)
        op = "*"
        while pos < len(s):
            factor, pos = self.parse_factor(s, pos)
            if op == "*":
                poly = poly * factor
            else:
                if len(factor.coeffs) != 1 or factor.total_degree() != 0:
                    raise FieldError("can only divide by a scalar factor")
                poly = poly.scale(fld.inv(next(iter(factor.coeffs.values()))))
            if pos < len(s):
                if s[pos] not in "*/":
                    raise FieldError(f"unexpected character {s[pos]!r} in term {term!r}")
                op = s[pos]
                pos += 1
        return poly

    def parse_factor(self, s: str, pos: int):
        fld = self.field
        if pos >= len(s):
            raise FieldError("dangling operator in polynomial text")
        ch = s[pos]
        if ch == "(":
            depth, j = 1, pos + 1
            while j < len(s) and depth:
                if s[j] == "(":
                    depth += 1
                elif s[j] == ")":
                    depth -= 1
                j += 1
            if depth:
                raise FieldError("unbalanced parenthesis in polynomial text")
            val = parse_element(fld, s[pos + 1:j - 1])
            return MultiPoly.constant(fld, self.nvars, val), j
        if ch.isdigit():
            j = pos
            while j < len(s) and s[j].isdigit():
                j += 1
            return MultiPoly.constant(fld, self.nvars, int(s[pos:j])), j
        for kw in ("zeta", "u"):
            if s.startswith(kw, pos) and kw not in self.index:
                j = pos + len(kw)
                if kw == "u":
                    val = fld.golden_ratio()
                else:
                    order = getattr(fld, "m", None) or fld.spec.zeta_order
                    if not order:
                        raise FieldError("zeta used but the field fixes no root order")
                    val = fld.root_of_unity(order)
                val, j = self._apply_power(fld, val, s, j)
                return MultiPoly.constant(fld, self.nvars, val), j
        for name in self.names:
            if s.startswith(name, pos):
                j = pos + len(name)
                exp = 1
                if j < len(s) and s[j] == "^":
                    j += 1
                    k = j
                    while k < len(s) and s[k].isdigit():
                        k += 1
                    if k == j:
                        raise FieldError("exponent expected after ^")
                    exp = int(s[j:k])
                    j = k
                exps = tuple(exp if i == self.index[name] else 0
                             for i in range(self.nvars))
                return MultiPoly.monomial(fld, self.nvars, exps), j
        raise FieldError(f"cannot read a factor at {s[pos:]!r}")

    @staticmethod
    def _apply_power(fld, val, s, j):
        if j < len(s) and s[j] == "^":
            j += 1
            k = j
            while k < len(s) and s[k].isdigit():
                k += 1
            if k == j:
                raise FieldError("exponent expected after ^")
            val = fld.pow(val, int(s[j:k]))
            j = k
        return val, j


def parse_poly(field: Field, text: str, names=None, nvars=None) -> MultiPoly:
    if names is None:
        if nvars is None:
            raise ValueError("parse_poly needs names or nvars")
        names = default_names(nvars)
    return _PolyParser(field, names).parse(text)


def parse_bihom(field: Field, text: str, nvars: int,
                anames=None, xnames=None) -> BihomForm:
    """Inverse of bihom_to_text; terms look like 'coef*a^i*b^j @ x^k*y^l'."""
    if anames is None:
        anames = default_names(nvars, "a")
    if xnames is None:
        xnames = default_names(nvars, "x")
    aparse = _PolyParser(field, anames)
    xparse = _PolyParser(field, xnames)
    text = text.strip().replace("⊗", "@")
    if text == "0":
        raise FieldError("cannot infer a bidegree from the zero form")
    pairs = []
    for sign, term in _PolyParser.split_terms(text):
        if "@" not in term:
            raise FieldError("bihomogeneous term needs a '⊗' separator")
        left, right = term.split("@", 1)
        h = aparse.parse_term(left.strip()).scale(sign)
        g = xparse.parse_term(right.strip())
        if not h.is_zero() and not g.is_zero():
            pairs.append((h, g))
    return BihomForm.from_pairs(field, nvars, pairs)
