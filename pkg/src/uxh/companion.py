"""Companion maps of a bihomogeneous form and invariants of their images.

Splitting F_Z = sum h_i(a) g_i(x) yields two rational maps, one from each
factor.  This module decomposes forms over a chosen basis and measures the
images: Hilbert function values by rank of evaluated monomial spans, the
dimension/degree/h-vector by finite-difference fits, graded ideal pieces
and minimal generator counts by evaluation kernels, plus base-locus and
Jacobian sampling and the blow-up degree formula.

Every randomized rank is recomputed at two matrix widths and over two
primes; any disagreement raises instead of averaging.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

import numpy as np

from .configs import catalog, normalize_point
from .field import Field, FieldError, make_field, default_field_specs
from .ideals import HVector
from .linalg import ExactMatrix, RowSpanModP, _matmul_modp, rank as row_rank
from .poly import (MultiPoly, coefficient_count, mono_index, monomials,
                   parse_poly, poly_to_text)
from .unexpected import DisagreementError
from . import reference_forms as ref


class StabilizationError(RuntimeError):
    """A sampled rank kept changing within the point budget."""


MAP_NAMES = ("f4", "h3-phi", "h3-psi", "h3-bar",
             "fermat-phi", "fermat-phibar", "fermat-psi")


class RationalMapDescriptor:
    """A rational map P^n -> P^N given by N+1 forms of one degree.

    ``base_points`` is an optional declared base locus: a list of
    (point, multiplicity) pairs.  None means undeclared; an empty list
    asserts the map is base point free.
    """

    def __init__(self, name: str, field: Field, nvars: int, forms,
                 base_points=None, source=None):
        if not forms:
            raise ValueError("a rational map needs at least one form")
        degrees = set()
        for f in forms:
            if not f.is_zero():
                if not f.is_homogeneous():
                    raise ValueError(f"{name}: non-homogeneous form")
                degrees.add(f.homogeneous_degree())
        if not degrees:
            raise ValueError(f"{name}: all forms vanish")
        if len(degrees) > 1:
            raise ValueError(f"{name}: mixed form degrees {sorted(degrees)}")
        self.name = name
        self.field = field
        self.nvars = nvars
        self.forms = list(forms)
        self.degree = degrees.pop()
        self.base_points = (None if base_points is None
                            else [(tuple(p), int(m)) for p, m in base_points])
        if source is None:
            source = ("forms", [poly_to_text(f) for f in self.forms], nvars,
                      None if self.base_points is None else
                      [([field.fmt(c) for c in p], m)
                       for p, m in self.base_points])
        self.source = source

    @property
    def n(self) -> int:
        return self.nvars - 1

    @property
    def N(self) -> int:
        return len(self.forms) - 1

    def over(self, field: Field) -> "RationalMapDescriptor":
        kind = self.source[0]
        if kind == "catalog-map":
            _, name, m = self.source
            return catalog_map(name, field, m=m)
        _, texts, nvars, base = self.source
        forms = [parse_poly(field, s, nvars=nvars) for s in texts]
        base_points = (None if base is None else
                       [([field.parse(c) for c in p], m) for p, m in base])
        return RationalMapDescriptor(self.name, field, nvars, forms,
                                     base_points=base_points,
                                     source=self.source)

    def to_json(self) -> dict:
        out = {"name": self.name, "n": self.n, "N": self.N,
               "degree": self.degree,
               "forms": [poly_to_text(f) for f in self.forms]}
        if self.base_points is not None:
            out["base_points"] = [
                {"point": [self.field.fmt(c) for c in p], "mult": m}
                for p, m in self.base_points]
        return out

    def __repr__(self):
        return (f"<{self.name}: P^{self.n} -> P^{self.N} "
                f"by degree-{self.degree} forms>")


def map_requirements(name: str, m=None) -> dict:
    """Field constants a catalog map needs, mirroring the configurations."""
    low = name.strip().lower().partition(":")[0]
    if low in ("h3-phi", "h3-psi", "h3-bar"):
        return {"golden": True, "zeta": None}
    if low in ("fermat-phi", "fermat-phibar", "fermat-psi"):
        if m is None:
            raise FieldError(f"{name} needs the parameter m")
        return {"golden": False, "zeta": m if m >= 3 else None}
    if low == "f4":
        return {"golden": False, "zeta": None}
    raise FieldError(f"unknown map {name!r}; choices: {MAP_NAMES}")


def catalog_map(name: str, field: Field, m=None) -> RationalMapDescriptor:
    """Build a named companion map over the given field."""
    low = name.strip().lower()
    if ":" in low:
        low, _, tail = low.partition(":")
        if m is None:
            try:
                m = int(tail)
            except ValueError:
                raise FieldError(f"bad parameter in {name!r}; use e.g. "
                                 f"fermat-phi:5")
    simple = lambda pts: [(p, 1) for p in pts]
    if low == "f4":
        forms = ref.f4_generators(field)
        base = simple(catalog("f4", field).points)
        label = "f4"
    elif low == "h3-phi":
        forms = ref.h3_sextics(field)
        base = simple(catalog("h3", field).points)
        label = low
    elif low == "h3-bar":
        forms = ref.h3_projection_sextics(field)
        base = simple(catalog("h3", field).points)
        label = low
    elif low == "h3-psi":
        forms = ref.h3_companion_generators(field)
        base = []
        label = low
    elif low in ("fermat-phi", "fermat-phibar", "fermat-psi"):
        if m is None or m < 2:
            raise FieldError(f"{name} needs a parameter m >= 2")
        if low == "fermat-phi":
            forms = ref.fermat_phi_forms(field, m)
            base = simple(catalog(f"fermat3:{m}", field).points)
        elif low == "fermat-phibar":
            if m < 4:
                raise FieldError("the projected map needs m >= 4")
            forms = ref.fermat_projection_forms(field, m)
            base = simple(catalog(f"fermat3:{m}", field).points)
        else:
            forms = ref.fermat_companion_forms(field, m)
            base = []
        label = f"{low}:{m}"
    else:
        raise FieldError(f"unknown map {name!r}; choices: {MAP_NAMES}")
    nvars = forms[0].nvars
    return RationalMapDescriptor(label, field, nvars, forms,
                                 base_points=base,
                                 source=("catalog-map", label, m))


def fermat_catalog_maps(field: Field, m: int) -> dict:
    """The maps attached to Z(F_{m,3}): phi, its projection (m >= 4),
    the coefficient-side map psi, and the curve family for verification."""
    if m < 2:
        raise FieldError("fermat maps need m >= 2")
    out = {"phi": catalog_map("fermat-phi", field, m=m),
           "psi": catalog_map("fermat-psi", field, m=m),
           "curve": ref.fermat_curve_form(field, m)}
    if m >= 4:
        out["phibar"] = catalog_map("fermat-phibar", field, m=m)
    return out


def map_field_specs(mp: RationalMapDescriptor, count: int = 2) -> list:
    if mp.source[0] == "catalog-map":
        req = map_requirements(mp.source[1], m=mp.source[2])
        return default_field_specs(golden=req["golden"],
                                   zeta_order=req["zeta"], count=count)
    spec = mp.field.spec
    golden = spec.extension == "golden"
    zeta = spec.zeta_order if spec.extension == "zeta" else None
    return default_field_specs(golden=golden, zeta_order=zeta, count=count)


# -- decomposition -------------------------------------------------------------

def reference_decompose_basis(config, d: int):
    """The explicit generator list matching a catalog configuration and
    degree, or None when no such list is on record."""
    if config.source[0] != "catalog":
        return None
    name = config.source[1].partition(":")[0].lower()
    m = config.source[2]
    fld = config.field
    if name == "b4" and d == 4:
        return ref.f4_generators(fld)
    if name == "h3" and d == 6:
        return ref.h3_sextics(fld)
    if name == "fermat3" and m is not None and d == m + 2:
        return ref.fermat_phi_forms(fld, m)
    return None


def support_decompose_basis(F) -> list:
    """Monomial basis from the x-support of F; decomposing over it just
    reads off the coefficient slices."""
    fld = F.field
    return [MultiPoly.monomial(fld, F.nvars, ex)
            for ex in sorted(F.x_slices())]


def decompose(F, basis) -> list:
    """Coefficients h_i with F = sum h_i(a) g_i(x), unique over an
    independent basis.

    Raises when the basis is dependent or some x-slice of F falls outside
    its span.
    """
    fld = F.field
    d = F.bidegree[1]
    cols = [g.coeff_vector(d) for g in basis]
    nrows = coefficient_count(F.nvars, d)
    mat = ExactMatrix.build(
        fld, [[cols[j][i] for j in range(len(basis))] for i in range(nrows)])
    if mat.rank() != len(basis):
        raise ValueError("dependent basis; decomposition is not unique")
    hs = [{} for _ in basis]
    for ea, xpoly in F.a_slices().items():
        sol = mat.solve(xpoly.coeff_vector(d))
        if sol is None:
            raise ValueError(
                "an x-slice of F lies outside the span of the basis")
        for i, c in enumerate(sol):
            if not fld.is_zero(c):
                hs[i][ea] = c
    return [MultiPoly(fld, F.nvars, h) for h in hs]


# -- numeric probes ------------------------------------------------------------

def blowup_degree(e: int, n: int, base_mults) -> int:
    """Self-intersection (eH - sum m_i E_i)^n on the blow-up at reduced
    points: e^n - sum m_i^n."""
    if n not in (2, 3):
        raise ValueError(f"unsupported ambient dimension {n}")
    return e ** n - sum(int(m) ** n for m in base_mults)


def map_degree(mp: RationalMapDescriptor, image_degree: int) -> int:
    """Blow-up degree divided by the image degree.

    Valid when the declared base scheme consists of reduced simple points
    resolved by a single blow-up (true for every catalog map); a
    non-integer ratio means that assumption failed.
    """
    if mp.base_points is None:
        raise ValueError(f"{mp.name}: base locus undeclared")
    total = blowup_degree(mp.degree, mp.n, [m for _, m in mp.base_points])
    q, r = divmod(total, image_degree)
    if r != 0 or q < 1:
        raise ValueError(
            f"{mp.name}: blow-up degree {total} is not a positive multiple "
            f"of the image degree {image_degree}; base scheme not resolved")
    return q


def base_locus_probe(mp: RationalMapDescriptor, candidates) -> list:
    """Candidates (a PointConfiguration or an iterable of points) at which
    every form of the map vanishes."""
    fld = mp.field
    pts = getattr(candidates, "points", candidates)
    out = []
    for p in pts:
        if all(fld.is_zero(f.evaluate(p)) for f in mp.forms):
            out.append(tuple(p))
    return out


def alphabet_points(field: Field, nvars: int, golden: bool = False,
                    zeta_order=None) -> list:
    """All projective points with coordinates in a small structured
    alphabet: 0, +-1, optionally +-u and +-u^2, optionally +-zeta^k."""
    letters = [field.zero, field.one, field.neg(field.one)]
    if golden:
        u = field.golden_ratio()
        for v in (u, field.mul(u, u)):
            letters.extend([v, field.neg(v)])
    if zeta_order:
        z = field.root_of_unity(zeta_order)
        w = z
        for _ in range(1, zeta_order):
            letters.extend([w, field.neg(w)])
            w = field.mul(w, z)
    seen = {}
    stack = [()]
    for _ in range(nvars):
        stack = [t + (c,) for t in stack for c in letters]
    for t in stack:
        if all(field.is_zero(c) for c in t):
            continue
        seen.setdefault(normalize_point(field, t), None)
    return list(seen)


def jacobian_rank_probe(mp: RationalMapDescriptor, trials: int = 25,
                        seed: int = 0) -> dict:
    """Rank of the matrix of first partials at random non-base points."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    fld = mp.field
    partials = [[f.partial(j) for j in range(mp.nvars)] for f in mp.forms]
    rng = fld.rng(seed, f"jacobian:{mp.name}")
    ranks = []
    for _ in range(trials):
        while True:
            pt = fld.random_point(rng, mp.nvars)
            if any(not fld.is_zero(f.evaluate(pt)) for f in mp.forms):
                break
        rows = [[pf.evaluate(pt) for pf in row] for row in partials]
        ranks.append(row_rank(fld, rows))
    full = min(mp.nvars, len(mp.forms))
    return {"trials": trials, "min": min(ranks), "max": max(ranks),
            "full": full, "full_rank_count": sum(r == full for r in ranks)}


# -- image Hilbert functions ---------------------------------------------------

def _hf_bound(mp: RationalMapDescriptor, k: int) -> int:
    return min(comb(mp.N + k, k), comb(mp.n + mp.degree * k, mp.n))


_MIX_BATCH = 128


def _hf_chain_modp(mp: RationalMapDescriptor, kmax: int, npts: int,
                   seed) -> list:
    """Ranks of the evaluated power spans, degrees 0..kmax.

    The degree-k span is grown from the degree-(k-1) basis times the
    forms; when that candidate set is large, dense random mixes of the
    basis rows stand in for it, added until a full sweep gains no rank.
    """
    fld = mp.field
    p = fld.modulus
    rng = fld.rng(seed, f"image-hf:{mp.name}:{npts}")
    nprng = np.random.default_rng(rng.randrange(2 ** 63))
    pts = [fld.random_point(rng, mp.nvars) for _ in range(npts)]
    vals = np.array([[int(f.evaluate(pt)) for pt in pts] for f in mp.forms],
                    dtype=np.int64) % p
    nf = vals.shape[0]
    span = RowSpanModP(p, npts)
    span.add_rows(vals)
    ranks = [1, span.rank]
    basis = span.rows
    for j in range(2, kmax + 1):
        span = RowSpanModP(p, npts)
        ncand = basis.shape[0] * nf
        cap = min(ncand, _hf_bound(mp, j) + 16)
        if ncand <= max(8 * _MIX_BATCH, 2 * cap):
            for i in range(nf):
                span.add_rows(basis * vals[i][None, :] % p)
        else:
            sweeps = 0
            limit = cap // (_MIX_BATCH * nf) + 6
            while sweeps < limit:
                gained = 0
                for i in range(nf):
                    mix = nprng.integers(0, p, size=(_MIX_BATCH,
                                                     basis.shape[0]))
                    rows = _matmul_modp(mix, basis, p) * vals[i][None, :] % p
                    gained += span.add_rows(rows)
                sweeps += 1
                if gained == 0:
                    break
            else:
                raise StabilizationError(
                    f"{mp.name}: span at degree {j} kept growing past the "
                    f"row budget")
        ranks.append(span.rank)
        basis = span.rows
    return ranks


def _hf_chain_generic(mp: RationalMapDescriptor, kmax: int, npts: int,
                      seed) -> list:
    fld = mp.field
    rng = fld.rng(seed, f"image-hf:{mp.name}:{npts}")
    pts = [fld.random_point(rng, mp.nvars) for _ in range(npts)]
    vals = [[f.evaluate(pt) for pt in pts] for f in mp.forms]
    basis = ExactMatrix.build(fld, vals).row_basis()
    ranks = [1, len(basis)]
    for _ in range(2, kmax + 1):
        cand = [[fld.mul(b[t], v[t]) for t in range(npts)]
                for b in basis for v in vals]
        basis = ExactMatrix.build(fld, cand).row_basis()
        ranks.append(len(basis))
    return ranks


def _hf_chain(mp, kmax, npts, seed):
    if mp.field.modulus is not None:
        return _hf_chain_modp(mp, kmax, npts, seed)
    return _hf_chain_generic(mp, kmax, npts, seed)


def _hf_values(mp: RationalMapDescriptor, kmax: int, specs, seed) -> list:
    """HF(0..kmax) of the image, required to agree at two point-set
    sizes per prime and across the primes."""
    per_prime = {}
    for spec in specs:
        clone = mp.over(make_field(spec))
        base = _hf_bound(clone, kmax)
        first = _hf_chain(clone, kmax, base + 8, seed)
        second = _hf_chain(clone, kmax, base + 24, seed)
        if first != second:
            raise StabilizationError(
                f"{mp.name}: HF table changed with the point set: "
                f"{first} vs {second} (p={spec.p})")
        per_prime[spec.p] = first
    tables = set(map(tuple, per_prime.values()))
    if len(tables) > 1:
        raise DisagreementError(
            f"{mp.name}: HF tables differ across primes: {per_prime}")
    return list(tables.pop())


def image_hilbert_function(mp: RationalMapDescriptor, k: int,
                           specs=None, seed: int = 0) -> int:
    """HF of the image at degree k: the rank of the span of all degree-k
    monomials in the forms, evaluated at random source points.

    The rank must agree at two point-set sizes and across two primes.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if specs is None:
        specs = map_field_specs(mp)
    return _hf_values(mp, k, specs, seed)[k] if k else 1


def _difference(seq, order: int, i: int) -> int:
    return sum((-1) ** s * comb(order, s) * seq[i - s] for s in range(order + 1))


def _zero_extended_difference(seq, order: int, i: int) -> int:
    out = 0
    for s in range(order + 1):
        if i - s >= 0 and i - s < len(seq):
            out += (-1) ** s * comb(order, s) * seq[i - s]
    return out


def _degree_analysis(mp: RationalMapDescriptor, specs=None, seed: int = 0,
                     max_k: int = 16) -> dict:
    """Hilbert-function fit: image dimension, degree, h-vector, and the
    exact Hilbert polynomial with a one-degree validation.

    The dimension is the smallest r with the (r+1)-st difference of HF
    vanishing twice in a row, validated on one further degree.
    """
    if specs is None:
        specs = map_field_specs(mp)
    dim = None
    kmax = mp.n + 3
    while True:
        hf = _hf_values(mp, kmax, specs, seed)
        for r in range(0, mp.n + 1):
            if kmax < r + 3:
                continue
            if all(_difference(hf, r + 1, i) == 0
                   for i in (kmax - 2, kmax - 1, kmax)):
                dim = r
                break
        if dim is not None:
            break
        if kmax >= max_k:
            raise StabilizationError(
                f"{mp.name}: Hilbert polynomial did not stabilize by "
                f"degree {max_k}")
        kmax = min(kmax + 3, max_k)
    top = kmax
    degree = _difference(hf, dim, top)
    if degree < 1:
        raise StabilizationError(
            f"{mp.name}: fitted degree {degree} is not positive")
    entries = [_zero_extended_difference(hf, dim + 1, i)
               for i in range(top + 1)]
    while entries and entries[-1] == 0:
        entries.pop()
    hv = HVector(entries, len(entries), all(h >= 0 for h in entries))
    # Newton fit through the stabilized tail, validated on the last value
    xs = list(range(top - dim - 1, top))
    coeffs = _lagrange_fit(xs, [hf[x] for x in xs])
    check = sum(c * Fraction(top) ** i for i, c in enumerate(coeffs))
    if check != hf[top]:
        raise StabilizationError(
            f"{mp.name}: fitted polynomial fails validation at {top}")
    return {"hf": hf, "dim": dim, "degree": degree, "h_vector": hv,
            "hilbert_polynomial": coeffs}


def _lagrange_fit(xs, ys) -> list:
    """Coefficients (ascending, exact rationals) of the interpolating
    polynomial."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * xj
                new[t + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for t, c in enumerate(basis):
            coeffs[t] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def image_degree_and_hvector(mp: RationalMapDescriptor, specs=None,
                             seed: int = 0, max_k: int = 16):
    """(image dimension, image degree, h-vector) from the HF fit."""
    res = _degree_analysis(mp, specs=specs, seed=seed, max_k=max_k)
    return res["dim"], res["degree"], res["h_vector"]


# -- graded ideal pieces -------------------------------------------------------

def _evaluation_matrix_modp(mp, monos, points):
    fld = mp.field
    p = fld.modulus
    k = sum(monos[0]) if monos else 0
    vals = np.array([[int(f.evaluate(pt)) for f in mp.forms]
                     for pt in points], dtype=np.int64) % p
    powers = [np.ones_like(vals)]
    for _ in range(k):
        powers.append(powers[-1] * vals % p)
    a = np.empty((len(points), len(monos)), dtype=np.int64)
    for j, e in enumerate(monos):
        col = np.ones(len(points), dtype=np.int64)
        for i, ei in enumerate(e):
            if ei:
                col = col * powers[ei][:, i] % p
        a[:, j] = col
    return a


def _ideal_kernel(mp: RationalMapDescriptor, k: int, seed) -> list:
    """Basis (coefficient vectors) of degree-k forms vanishing on the
    image, by a rank-stabilized evaluation kernel."""
    fld = mp.field
    monos = monomials(len(mp.forms), k)
    bound = _hf_bound(mp, k)
    rng = fld.rng(seed, f"image-ideal:{mp.name}:{k}")
    sizes = (bound + 8, bound + 24, bound + 56)
    prev_rank = None
    for size in sizes:
        points = [fld.random_point(rng, mp.nvars) for _ in range(size)]
        if fld.modulus is not None:
            mat = ExactMatrix.build(fld,
                                    _evaluation_matrix_modp(mp, monos, points))
        else:
            rows = []
            for pt in points:
                vals = [f.evaluate(pt) for f in mp.forms]
                rows.append([_mono_value(fld, vals, e) for e in monos])
            mat = ExactMatrix.build(fld, rows)
        r = mat.rank()
        if r == prev_rank:
            return mat.kernel()
        prev_rank = r
    raise StabilizationError(
        f"{mp.name}: ideal piece at degree {k} did not stabilize")


def _mono_value(fld, vals, e):
    v = fld.one
    for i, ei in enumerate(e):
        if ei:
            v = fld.mul(v, fld.pow(vals[i], ei))
    return v


def image_ideal_basis(mp: RationalMapDescriptor, k: int,
                      seed: int = 0) -> list:
    """Degree-k generators of the image ideal as polynomials in the
    target coordinates (over the map's own field)."""
    nf = len(mp.forms)
    return [MultiPoly.from_coeff_vector(mp.field, nf, k, v)
            for v in _ideal_kernel(mp, k, seed)]


def _shift_rows(fld, vectors, nvars, k):
    """Multiply degree-(k-1) coefficient vectors by every variable."""
    src = monomials(nvars, k - 1)
    tgt = mono_index(nvars, k)
    out = []
    for vec in vectors:
        for j in range(nvars):
            row = [fld.zero] * len(tgt)
            for pos, c in enumerate(vec):
                if not fld.is_zero(c):
                    e = src[pos]
                    row[tgt[e[:j] + (e[j] + 1,) + e[j + 1:]]] = c
            out.append(row)
    return out


def image_ideal_dims(mp: RationalMapDescriptor, k: int, specs=None,
                     seed: int = 0):
    """(dim I(X)_k, minimal generator count in degree k), cross-checked
    over two primes."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    if specs is None:
        specs = map_field_specs(mp)
    results = set()
    for spec in specs:
        clone = mp.over(make_field(spec))
        fld = clone.field
        nf = len(clone.forms)
        kern = _ideal_kernel(clone, k, seed)
        dim = len(kern)
        if k == 1:
            results.add((dim, dim))
            continue
        prev = _ideal_kernel(clone, k - 1, seed)
        shifts = _shift_rows(fld, prev, nf, k)
        covered = row_rank(fld, shifts) if shifts else 0
        results.add((dim, dim - covered))
    if len(results) > 1:
        raise DisagreementError(
            f"{mp.name}: ideal dimensions at degree {k} differ across "
            f"primes: {sorted(results)}")
    return results.pop()


# -- assembled reports ---------------------------------------------------------

@dataclass
class MapReport:
    """Invariants of one companion-map image."""

    map_name: str
    source_dim: int
    target_dim: int
    form_degree: int
    hf: list
    hilbert_polynomial: list
    dim: int
    degree: int
    h_vector: list
    h_vector_acm_plausible: bool
    ideal_dims: dict
    minimal_generators: dict
    base_locus: dict
    jacobian: dict
    blowup_degree: int = None
    map_degree: int = None
    map_degree_assumption: str = ""
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "map": self.map_name,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "form_degree": self.form_degree,
            "hf": list(self.hf),
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial],
            "dim": self.dim,
            "degree": self.degree,
            "h_vector": list(self.h_vector),
            "h_vector_acm_plausible": self.h_vector_acm_plausible,
            "ideal_dims": {str(k): v for k, v in self.ideal_dims.items()},
            "minimal_generators": {str(k): v for k, v in
                                   self.minimal_generators.items()},
            "base_locus": dict(self.base_locus),
            "jacobian": dict(self.jacobian),
            "blowup_degree": self.blowup_degree,
            "map_degree": self.map_degree,
            "map_degree_assumption": self.map_degree_assumption,
            "notes": list(self.notes),
        }


def image_report(mp: RationalMapDescriptor, ideal_ks=(1, 2, 3),
                 jacobian_trials: int = 25, specs=None, seed: int = 0,
                 max_k: int = 16, notes=()) -> MapReport:
    """Full measurement of one map image.

    The blow-up and map degrees are only computed when a base locus is
    declared; a failed reduced-base assumption is recorded as a note
    rather than discarding the rest of the report.
    """
    if specs is None:
        specs = map_field_specs(mp)
    analysis = _degree_analysis(mp, specs=specs, seed=seed, max_k=max_k)
    ideal_dims = {}
    mingens = {}
    for k in ideal_ks:
        ideal_dims[k], mingens[k] = image_ideal_dims(mp, k, specs=specs,
                                                     seed=seed)
    notes = list(notes)
    base = {"declared": None, "verified": None}
    bdeg = mdeg = None
    assumption = ""
    if mp.base_points is not None:
        declared = [p for p, _ in mp.base_points]
        base["declared"] = len(declared)
        base["verified"] = len(base_locus_probe(mp, declared))
        bdeg = blowup_degree(mp.degree, mp.n, [m for _, m in mp.base_points])
        assumption = ("base scheme assumed reduced simple points resolved "
                      "by one blow-up")
        try:
            mdeg = map_degree(mp, analysis["degree"])
        except ValueError as exc:
            notes.append(str(exc))
    jac = jacobian_rank_probe(mp, trials=jacobian_trials, seed=seed)
    hv = analysis["h_vector"]
    return MapReport(
        map_name=mp.name, source_dim=mp.n, target_dim=mp.N,
        form_degree=mp.degree, hf=analysis["hf"],
        hilbert_polynomial=analysis["hilbert_polynomial"],
        dim=analysis["dim"], degree=analysis["degree"],
        h_vector=list(hv.entries), h_vector_acm_plausible=hv.acm_plausible,
        ideal_dims=ideal_dims, minimal_generators=mingens,
        base_locus=base, jacobian=jac, blowup_degree=bdeg, map_degree=mdeg,
        map_degree_assumption=assumption, notes=notes)
