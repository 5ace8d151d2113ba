"""Unexpectedness detection and the bihomogeneous solver.

A hypersurface of degree d through a point set Z with a general point of
multiplicity m is unexpected when the space of such forms is larger than
the naive conditions count predicts.  Verdicts here come from exact rank
computations, repeated over several seeds and at least two primes; any
disagreement is an error, never averaged away.

The solver builds F_Z(a; x) of bidegree (t, d) symbolically: writing F in
terms of a basis g_1..g_r of the degree-d ideal piece makes vanishing on Z
automatic, and the multiplicity conditions become coefficient-wise linear
equations on the substituted partials.  No random probe points enter; a
one-dimensional kernel is a complete certificate.
"""

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .configs import PointConfiguration, config_requirements
from .field import Field, make_field, default_field_specs
from .ideals import evaluation_rows, ideal_piece
from .linalg import RowSpanModP, kernel as nullspace
from .poly import (BihomForm, MultiPoly, coefficient_count, derivative,
                   derivative_orders, mono_index, monomials, multiplicity_at,
                   proportional, tangent_cone)


class DisagreementError(RuntimeError):
    """Raised when seeds or primes yield different exact answers."""


class BihomSolveError(RuntimeError):
    """Raised when no t yields a one-dimensional kernel.

    ``kernel_dims`` maps each tried a-degree t to the kernel dimension
    found there.
    """

    def __init__(self, message: str, kernel_dims: dict):
        super().__init__(message)
        self.kernel_dims = dict(kernel_dims)


# -- field selection ---------------------------------------------------------

def field_specs_for(config: PointConfiguration, count: int = 2) -> list:
    """Prime-field specs suitable for rebuilding the configuration."""
    kind = config.source[0]
    if kind == "catalog":
        label, m = config.source[1], config.source[2]
        req = config_requirements(label.partition(":")[0], m=m)
        return default_field_specs(golden=req["golden"],
                                   zeta_order=req["zeta"], count=count)
    spec = config.field.spec
    golden = spec.extension == "golden"
    zeta = spec.zeta_order if spec.extension == "zeta" else None
    return default_field_specs(golden=golden, zeta_order=zeta, count=count)


def _probe_points(config: PointConfiguration, mults, d: int, seed) -> list:
    """Seeded general points, one per multiplicity, avoiding Z and repeats."""
    fld = config.field
    rng = fld.rng(seed, f"unexpected:{config.name}:{d}")
    taken = set(config.points)
    out = []
    for m in mults:
        while True:
            pt = fld.random_point(rng, config.nvars)
            if pt not in taken:
                break
        taken.add(pt)
        out.append((pt, int(m)))
    return out


# -- detection ---------------------------------------------------------------

def expected_dimension(config: PointConfiguration, d: int, mults) -> int:
    """max{0, dim [I(Z)]_d - sum of fat-point conditions}."""
    mults = [int(m) for m in mults]
    if not mults or min(mults) < 1:
        raise ValueError("mults must be a nonempty list of positive integers")
    dim_ideal = ideal_piece(config, d).dim
    conditions = sum(comb(config.N + m - 1, config.N) for m in mults)
    return max(0, dim_ideal - conditions)


def _actual_runs(config, d, mults, seeds, specs):
    mults = [int(m) for m in mults]
    if not mults or min(mults) < 1:
        raise ValueError("mults must be a nonempty list of positive integers")
    if specs is None:
        specs = field_specs_for(config)
    runs = []
    values = set()
    ideal_dims = set()
    for spec in specs:
        cfg = config.over(make_field(spec))
        ideal_dims.add(ideal_piece(cfg, d).dim)
        for seed in seeds:
            fat = _probe_points(cfg, mults, d, seed)
            mat = evaluation_rows(cfg, d, fat=fat)
            dim = coefficient_count(cfg.nvars, d) - mat.rank()
            runs.append({"p": spec.p, "seed": int(seed), "actual": dim})
            values.add(dim)
    if len(values) > 1:
        raise DisagreementError(
            f"actual dimension differs across seeds/primes: {runs}")
    if len(ideal_dims) > 1:
        raise DisagreementError(
            f"dim [I(Z)]_{d} differs across primes: {sorted(ideal_dims)}")
    return values.pop(), runs, ideal_dims.pop()


def actual_dimension(config: PointConfiguration, d: int, mults,
                     seeds=(0, 1, 2), specs=None) -> int:
    """dim of degree-d forms through Z with seeded general fat points.

    The rank is recomputed for every (prime, seed) pair and must agree
    exactly everywhere.
    """
    value, _, _ = _actual_runs(config, d, mults, seeds, specs)
    return value


@dataclass
class UnexpectedReport:
    """Outcome of one unexpectedness test, with the numbers behind it."""

    config: str
    degree: int
    multiplicities: tuple
    ideal_dimension: int
    conditions: int
    expected_raw: int
    expected: int
    actual: int
    verdict: str
    unique: bool
    runs: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "degree": self.degree,
            "multiplicities": list(self.multiplicities),
            "ideal_dimension": self.ideal_dimension,
            "conditions": self.conditions,
            "expected_raw": self.expected_raw,
            "expected": self.expected,
            "actual": self.actual,
            "verdict": self.verdict,
            "unique": self.unique,
            "runs": [dict(r) for r in self.runs],
        }


def is_unexpected(config: PointConfiguration, d: int, mults,
                  seeds=(0, 1, 2), specs=None) -> UnexpectedReport:
    """Compare actual and expected dimensions; verdict per the inequality

    actual > max{0, dim [I(Z)]_d - conditions}  and  actual > 0.
    """
    actual, runs, ideal_dim = _actual_runs(config, d, mults, seeds, specs)
    mults = tuple(int(m) for m in mults)
    conditions = sum(comb(config.N + m - 1, config.N) for m in mults)
    raw = ideal_dim - conditions
    expected = max(0, raw)
    if actual == 0:
        verdict = "empty system"
    elif actual > expected:
        verdict = "unexpected"
    else:
        verdict = "expected"
    return UnexpectedReport(
        config=config.name, degree=int(d), multiplicities=mults,
        ideal_dimension=ideal_dim, conditions=conditions,
        expected_raw=raw, expected=expected, actual=actual,
        verdict=verdict, unique=(actual == 1), runs=runs)


def cone_property(config: PointConfiguration, d: int,
                  seeds=(0, 1, 2), specs=None) -> bool:
    """True when Z admits an unexpected degree-d hypersurface with a
    general point of multiplicity d (necessarily a cone)."""
    report = is_unexpected(config, d, [d], seeds=seeds, specs=specs)
    return report.verdict == "unexpected"


# -- the bihomogeneous solver -------------------------------------------------

def _substitution_rows_modp(field, basis, t, d, nvars):
    """Index plumbing for the mod-p system, shared across all gamma of one
    derivative order: maps (a-monomial, x-monomial) to the row of the
    collapsed a-monomial of degree t + d - k."""
    amons = monomials(nvars, t)
    cache = {}

    def index_table(k):
        if k not in cache:
            xmons = monomials(nvars, d - k)
            tgt = mono_index(nvars, t + d - k)
            idx = np.empty((len(amons), len(xmons)), dtype=np.int64)
            for a_pos, ea in enumerate(amons):
                for x_pos, ex in enumerate(xmons):
                    idx[a_pos, x_pos] = tgt[tuple(u + v for u, v in zip(ea, ex))]
            cache[k] = (idx, mono_index(nvars, d - k),
                        len(monomials(nvars, t + d - k)))
        return cache[k]

    return amons, index_table


def _solve_modp(field, basis, t, d, m, nvars):
    """Kernel of the multiplicity-m conditions over F_p.

    Returns (kdim, vector or None); the vector is indexed by
    (a-monomial position) * len(basis) + basis index.
    """
    p = field.modulus
    amons, index_table = _substitution_rows_modp(field, basis, t, d, nvars)
    r = len(basis)
    ncols = len(amons) * r
    cols = np.arange(len(amons), dtype=np.int64) * r
    span = RowSpanModP(p, ncols)
    for gamma in derivative_orders(nvars, m):
        k = sum(gamma)
        idx, xpos_of, nrows = index_table(k)
        chunk = np.zeros((nrows, ncols), dtype=np.int64)
        for i, g in enumerate(basis):
            dg = derivative(g, gamma)
            for ex, c in dg.coeffs.items():
                chunk[idx[:, xpos_of[ex]], cols + i] = int(c) % p
        span.add_rows(chunk)
        if span.rank == ncols:
            return 0, None
    kdim = ncols - span.rank
    if kdim != 1:
        return kdim, None
    free = sorted(set(range(ncols)) - set(span.pivots))[0]
    vec = np.zeros(ncols, dtype=np.int64)
    vec[free] = 1
    vec[span.pivots] = (-span.rows[:, free]) % p
    return 1, [field.element(int(v)) for v in vec]


def _solve_generic(field, basis, t, d, m, nvars):
    """Same system over an arbitrary exact field (slow path)."""
    amons = monomials(nvars, t)
    r = len(basis)
    ncols = len(amons) * r
    rows = []
    for gamma in derivative_orders(nvars, m):
        k = sum(gamma)
        tgt = mono_index(nvars, t + d - k)
        block = [[field.zero] * ncols
                 for _ in range(len(monomials(nvars, t + d - k)))]
        for i, g in enumerate(basis):
            dg = derivative(g, gamma)
            for ex, c in dg.coeffs.items():
                for a_pos, ea in enumerate(amons):
                    mu = tuple(u + v for u, v in zip(ea, ex))
                    block[tgt[mu]][a_pos * r + i] = c
        rows.extend(block)
    basis_vectors = nullspace(field, rows)
    if len(basis_vectors) != 1:
        return len(basis_vectors), None
    return 1, basis_vectors[0]


@dataclass
class BihomSolveResult:
    """A solved F_Z with the search trace that produced it."""

    config: PointConfiguration
    degree: int
    multiplicity: int
    form: BihomForm
    bidegree: tuple
    kernel_dims: dict
    normalization: str = "leading coefficient 1 in graded lex order"

    def specialization_checks(self, count: int = 10, seed: int = 0) -> dict:
        """Specialize at random a-points: each specialization must vanish
        on Z and have multiplicity >= m at the chosen point."""
        fld = self.form.field
        rng = fld.rng(seed, f"bihom-check:{self.config.name}")
        vanish = mult_ok = 0
        for _ in range(count):
            pt = fld.random_point(rng, self.form.nvars)
            spec = self.form.specialize("a", pt)
            if spec.is_zero():
                continue
            if all(fld.is_zero(spec.evaluate(z)) for z in self.config.points):
                vanish += 1
            if multiplicity_at(spec, pt) >= self.multiplicity:
                mult_ok += 1
        return {"specializations": count, "vanish_on_Z": vanish,
                "multiplicity_ok": mult_ok}

    def to_json(self) -> dict:
        from .poly import bihom_to_text
        return {
            "config": self.config.name,
            "degree": self.degree,
            "multiplicity": self.multiplicity,
            "bidegree": list(self.bidegree),
            "kernel_dims": {str(t): k for t, k in self.kernel_dims.items()},
            "normalization": self.normalization,
            "form": bihom_to_text(self.form),
        }


def solve_bihom(config: PointConfiguration, d: int, m: int,
                t_max=None) -> BihomSolveResult:
    """Construct F_Z(a; x) of bidegree (t, d), m <= t <= t_max.

    Conditions: F lies in [I(Z)]_d for every a (guaranteed by writing F
    over a basis of the degree-d ideal piece) and every x-partial of order
    <= m-1, after the substitution x := a, vanishes identically.  The
    first t whose solution space is one-dimensional wins; kernel dimension
    0 everywhere, or > 1 anywhere, is an error carrying the full trace.
    """
    d, m = int(d), int(m)
    if m < 1 or d < 1:
        raise ValueError("degree and multiplicity must be positive")
    if t_max is None:
        t_max = m + 3
    piece = ideal_piece(config, d)
    if piece.dim == 0:
        raise BihomSolveError(f"[I({config.name})]_{d} is zero", {})
    basis = piece.polys()
    fld = config.field
    nvars = config.nvars
    kernel_dims = {}
    for t in range(m, int(t_max) + 1):
        if fld.modulus is not None:
            kdim, vec = _solve_modp(fld, basis, t, d, m, nvars)
        else:
            kdim, vec = _solve_generic(fld, basis, t, d, m, nvars)
        kernel_dims[t] = kdim
        if kdim == 1:
            amons = monomials(nvars, t)
            r = len(basis)
            pairs = []
            for a_pos, ea in enumerate(amons):
                for i in range(r):
                    c = vec[a_pos * r + i]
                    if not fld.is_zero(c):
                        pairs.append((MultiPoly.monomial(fld, nvars, ea, c),
                                      basis[i]))
            form = BihomForm.from_pairs(fld, nvars, pairs).normalized()
            return BihomSolveResult(config=config, degree=d, multiplicity=m,
                                    form=form, bidegree=(t, d),
                                    kernel_dims=kernel_dims)
        if kdim > 1:
            raise BihomSolveError(
                f"solution space at bidegree ({t},{d}) has dimension {kdim}; "
                f"the form is not unique", kernel_dims)
    raise BihomSolveError(
        f"no bidegree (t,{d}) with t <= {t_max} admits a solution "
        f"(kernel dimensions {kernel_dims})", kernel_dims)


# -- duality reports ----------------------------------------------------------

def bmss_report(result: BihomSolveResult, trials: int = 5,
                seed: int = 0) -> dict:
    """Tangent-cone duality observations.

    Writing C_P for the specialization a := P and D_Q for x := Q, each
    trial draws a random pair (P, Q) and records the multiplicity of C_P
    at P (the defining property, so it must equal m), the multiplicities
    of C_P at Q and of D_Q at P, and whether the tangent cones at those
    two points agree up to scalar once the two variable sets are
    identified.  For an unrelated random pair both multiplicities are 0
    and the comparison is trivially true; the substance of the duality
    sits on the diagonal, so each trial also compares the cones of C_P
    and of D_P at P itself.  Degenerate draws (Q = P, or a specialization
    vanishing identically, as happens at points of Z) are skipped.  This
    is a report of observations, not an assertion.
    """
    form = result.form
    fld = form.field
    n = form.nvars
    m = result.multiplicity
    out = []
    for k in range(trials):
        rng = fld.rng(seed, f"bmss:{result.config.name}:{k}")
        P = fld.random_point(rng, n)
        Q = fld.random_point(rng, n)
        while Q == P:
            Q = fld.random_point(rng, n)
        entry = {"P": [fld.fmt(c) for c in P], "Q": [fld.fmt(c) for c in Q]}
        spec_p = form.specialize("a", P)
        spec_q = form.specialize("x", Q)
        dual_p = form.specialize("x", P)
        if spec_p.is_zero() or spec_q.is_zero() or dual_p.is_zero():
            entry["status"] = "degenerate"
            out.append(entry)
            continue
        entry["mult_at_P"] = multiplicity_at(spec_p, P)
        cone_pq, mult_pq = tangent_cone(spec_p, Q)
        cone_qp, mult_qp = tangent_cone(spec_q, P)
        entry["mult_at_Q"] = mult_pq
        entry["dual_mult_at_P"] = mult_qp
        entry["cones_proportional"] = proportional(cone_pq, cone_qp)
        diag_c, _ = tangent_cone(spec_p, P)
        diag_d, diag_mult = tangent_cone(dual_p, P)
        entry["diagonal_mult"] = diag_mult
        entry["diagonal_cones_proportional"] = proportional(diag_c, diag_d)
        entry["status"] = "compared"
        out.append(entry)
    compared = [e for e in out if e["status"] == "compared"]
    return {
        "config": result.config.name,
        "degree": result.degree,
        "multiplicity": m,
        "trials": out,
        "compared": len(compared),
        "multiplicity_matches": all(
            e["mult_at_P"] == m for e in compared),
        "cones_agree": bool(compared) and all(
            e["cones_proportional"] for e in compared),
        "diagonal_mult_matches": bool(compared) and all(
            e["diagonal_mult"] == m for e in compared),
        "diagonal_cones_agree": bool(compared) and all(
            e["diagonal_cones_proportional"] for e in compared),
    }
