"""Graded pieces of ideals of fat-point schemes, Hilbert functions, h-vectors.

A graded piece [I]_d is computed as the kernel of an evaluation matrix: one
row per simple point, and for a point of multiplicity m one row for every
partial of order below m.  Rows may be dependent; rank sorts that out.

Derivatives are true partials, so over F_p the characteristic must dominate
the degrees in play whenever a multiplicity is at least 2; p > 2*d*m is
enforced.  Simple points involve no derivatives and carry no constraint,
which keeps tiny-prime cross-checks legal.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .field import Field, FieldError
from .linalg import ExactMatrix
from .poly import MultiPoly, derivative_orders, monomials

__all__ = [
    "GradedPiece", "HVector", "evaluation_rows", "ideal_piece",
    "hilbert_function", "h_vector_points", "h_vector_from_hf",
    "minimal_generators",
]


@dataclass
class GradedPiece:
    """Basis of [I]_d as coefficient vectors over monomials(nvars, d)."""

    field: Field
    nvars: int
    degree: int
    basis: list
    provenance: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def polys(self) -> list:
        return [MultiPoly.from_coeff_vector(self.field, self.nvars,
                                            self.degree, v)
                for v in self.basis]


@dataclass
class HVector:
    """Iterated finite differences of a Hilbert function."""

    entries: list
    sigma: int
    acm_plausible: bool

    def total(self) -> int:
        return sum(self.entries)


def h_vector_from_hf(hf: list) -> HVector:
    """First differences, trailing zeros dropped; needs a stabilized tail."""
    diffs = [hf[0]] + [hf[i] - hf[i - 1] for i in range(1, len(hf))]
    while diffs and diffs[-1] == 0:
        diffs.pop()
    return HVector(diffs, len(diffs), all(h >= 0 for h in diffs))


def _check_characteristic(field: Field, d: int, fat) -> None:
    mmax = max((m for _, m in fat), default=1)
    if mmax >= 2 and field.char and field.char <= 2 * d * mmax:
        raise FieldError(
            f"characteristic {field.char} too small for degree {d} with "
            f"multiplicity {mmax}; need p > {2 * d * mmax}")


def _rows_modp(field: Field, nvars: int, d: int, points, fat) -> np.ndarray:
    p = field.modulus
    E = np.array(monomials(nvars, d), dtype=np.int64)
    nm = E.shape[0]
    fall = np.ones((d + 1, d + 1), dtype=np.int64)
    for k in range(1, d + 1):
        for e in range(d + 1):
            v = 1
            for i in range(k):
                v *= e - i
            fall[k, e] = v % p

    def pow_table(pt):
        tbl = np.ones((nvars, d + 1), dtype=np.int64)
        for i in range(nvars):
            x = int(pt[i]) % p
            for k in range(1, d + 1):
                tbl[i, k] = tbl[i, k - 1] * x % p
        return tbl

    rows = []
    for pt in points:
        tbl = pow_table(pt)
        v = np.ones(nm, dtype=np.int64)
        for i in range(nvars):
            v = v * tbl[i, E[:, i]] % p
        rows.append(v)
    for pt, m in fat:
        tbl = pow_table(pt)
        for gamma in derivative_orders(nvars, m):
            v = np.ones(nm, dtype=np.int64)
            ok = np.ones(nm, dtype=bool)
            for i in range(nvars):
                g = gamma[i]
                col = E[:, i]
                if g:
                    ok &= col >= g
                    v = v * fall[g, col] % p
                    v = v * tbl[i, np.maximum(col - g, 0)] % p
                else:
                    v = v * tbl[i, col] % p
            v[~ok] = 0
            rows.append(v)
    if not rows:
        return np.zeros((0, nm), dtype=np.int64)
    return np.stack(rows)


def _rows_generic(field: Field, nvars: int, d: int, points, fat) -> list:
    monos = monomials(nvars, d)

    def mono_value(pt, exps):
        v = field.one
        for x, e in zip(pt, exps):
            if e:
                v = field.mul(v, field.pow(field.element(x), e))
        return v

    rows = []
    for pt in points:
        rows.append([mono_value(pt, e) for e in monos])
    for pt, m in fat:
        for gamma in derivative_orders(nvars, m):
            row = []
            for exps in monos:
                factor = 1
                shifted = []
                for e, g in zip(exps, gamma):
                    if e < g:
                        factor = 0
                        break
                    for i in range(g):
                        factor *= e - i
                    shifted.append(e - g)
                if factor == 0:
                    row.append(field.zero)
                else:
                    row.append(field.mul(field.element(factor),
                                         mono_value(pt, shifted)))
            rows.append(row)
    return rows


def evaluation_rows(config, d: int, fat=()) -> ExactMatrix:
    """Stacked condition matrix over the degree-d monomial basis."""
    field = config.field
    _check_characteristic(field, d, fat)
    note = f"{config.name} d={d}"
    if fat:
        note += " fat=" + ",".join(str(m) for _, m in fat)
    if field.modulus is not None:
        rows = _rows_modp(field, config.nvars, d, config.points, fat)
    else:
        rows = _rows_generic(field, config.nvars, d, config.points, fat)
    return ExactMatrix.build(field, rows, provenance=note)


def ideal_piece(config, d: int, fat=()) -> GradedPiece:
    """[I(Z) cap I(fat)]_d via the kernel of the evaluation matrix."""
    mat = evaluation_rows(config, d, fat)
    return GradedPiece(config.field, config.nvars, d, mat.kernel(),
                       provenance=mat.provenance)


def hilbert_function(config, d_max=None) -> list:
    """HF(i) = C(N+i, N) - dim [I(Z)]_i for i = 0..d_max.

    Without d_max, extends until the value reaches |Z|, which happens by
    degree |Z| - 1 for reduced points.
    """
    n = config.N
    target = len(config.points)
    out = []
    d = 0
    while True:
        out.append(comb(n + d, n) - ideal_piece(config, d).dim)
        if d_max is not None and d >= d_max:
            return out
        if d_max is None and out[-1] >= target:
            return out
        d += 1


def h_vector_points(config) -> HVector:
    hf = hilbert_function(config)
    return h_vector_from_hf(hf)


def minimal_generators(config, d: int) -> int:
    """dim [I]_d minus the dimension of S_1 * [I]_{d-1}."""
    if d < 1:
        raise ValueError("generator counts start at degree 1")
    field = config.field
    nvars = config.nvars
    piece = ideal_piece(config, d)
    if d == 0:
        return piece.dim
    below = ideal_piece(config, d - 1)
    if not below.basis:
        return piece.dim
    idx_d = {m: i for i, m in enumerate(monomials(nvars, d))}
    monos_low = monomials(nvars, d - 1)
    ncols = len(idx_d)
    shifted_rows = []
    for vec in below.basis:
        for i in range(nvars):
            row = [field.zero] * ncols
            for mono, c in zip(monos_low, vec):
                up = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                row[idx_d[up]] = c
            shifted_rows.append(row)
    products = ExactMatrix.build(field, shifted_rows,
                                 provenance=f"S_1*[I]_{d-1} of {config.name}")
    return piece.dim - products.rank()
