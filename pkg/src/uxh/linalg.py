"""Exact linear algebra over a field handle.

Prime fields (p < 2^20) take a vectorized numpy int64 path; every other
field falls back to a generic elimination over plain lists.  Both paths
use first-nonzero pivoting, so results are deterministic and identical in
structure.

The int64 path delays modular reduction: a row update adds at most p^2 per
entry, so a full reduction every few dozen pivots keeps everything well
inside int64 while skipping most of the remainder work.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

import numpy as np

from .field import Field

_REDUCE_EVERY = 48  # p < 2^20 so 48 unreduced updates stay below 2^46


def _as_array(rows, p: int) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def _matmul_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p; routed through float64 BLAS when products stay below
    2^53 so the rounding is exact."""
    inner = a.shape[1]
    if inner and inner * (p - 1) * (p - 1) < 2 ** 53:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(prod).astype(np.int64) % p
    return a @ b % p


def _ref_modp(a: np.ndarray, p: int) -> list[int]:
    """In-place row echelon form mod p; returns pivot column list.

    Forward elimination only.  Updates touch only the active block (rows
    below the pivot, columns from the pivot on): entries left of a pivot
    in the untouched region are already zero, so skipping them is exact.
    """
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    dirty = 0
    buf = np.empty_like(a)
    for c in range(n):
        if r == m:
            break
        col = a[r:, c] % p
        a[r:, c] = col
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            tmp = a[r].copy()
            a[r] = a[i]
            a[i] = tmp
        a[r, c:] %= p
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        tail = a[r + 1:, c:]
        if tail.shape[0]:
            cc = a[r + 1:, c]
            scratch = buf[: tail.shape[0], : tail.shape[1]]
            np.multiply(cc[:, None], a[r, c:][None, :], out=scratch)
            np.subtract(tail, scratch, out=tail)
        pivots.append(c)
        r += 1
        dirty += 1
        if dirty >= _REDUCE_EVERY:
            a[r:, c:] %= p
            dirty = 0
    a %= p
    return pivots


def _back_substitute_modp(a: np.ndarray, pivots: list[int], p: int) -> None:
    """Turn an echelon form into reduced row echelon form, in place."""
    dirty = 0
    buf = np.empty_like(a[: max(len(pivots), 1)])
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        a[r, c:] %= p
        col = a[:r, c] % p
        a[:r, c] = col
        if np.any(col):
            block = a[:r, c:]
            scratch = buf[:r, : block.shape[1]]
            np.multiply(col[:, None], a[r, c:][None, :], out=scratch)
            np.subtract(block, scratch, out=block)
        dirty += 1
        if dirty >= _REDUCE_EVERY:
            a[: len(pivots)] %= p
            dirty = 0
    a %= p


def _ref_generic(rows: list[list], fld: Field) -> list[int]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        i = next((j for j in range(r, m) if not fld.is_zero(rows[j][c])), None)
        if i is None:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        inv = fld.inv(rows[r][c])
        rows[r] = [fld.mul(inv, x) for x in rows[r]]
        for j in range(r + 1, m):
            f = rows[j][c]
            if not fld.is_zero(f):
                rows[j] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[j], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def _back_substitute_generic(rows: list[list], pivots: list[int], fld: Field) -> None:
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        for j in range(r):
            f = rows[j][c]
            if not fld.is_zero(f):
                rows[j] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[j], rows[r])]


@dataclass
class ExactMatrix:
    """Dense matrix over a field handle, with a provenance note.

    ``data`` is an int64 ndarray on the prime-field fast path and a list of
    element lists otherwise.
    """

    field: Field
    data: object
    provenance: str = ""
    _echelon: object = dfield(default=None, repr=False, compare=False)

    @staticmethod
    def build(fld: Field, rows, provenance: str = "") -> "ExactMatrix":
        if fld.modulus is not None:
            return ExactMatrix(fld, _as_array(rows, fld.modulus), provenance)
        return ExactMatrix(fld, [list(r) for r in rows], provenance)

    @property
    def nrows(self) -> int:
        return self.data.shape[0] if isinstance(self.data, np.ndarray) else len(self.data)

    @property
    def ncols(self) -> int:
        if isinstance(self.data, np.ndarray):
            return self.data.shape[1]
        return len(self.data[0]) if self.data else 0

    def _forward(self):
        """(echelon rows, pivot list, rref_done flag holder), cached."""
        if self._echelon is None:
            if isinstance(self.data, np.ndarray):
                a = self.data.copy()
                piv = _ref_modp(a, self.field.modulus)
            else:
                a = [list(r) for r in self.data]
                piv = _ref_generic(a, self.field)
            self._echelon = [a, piv, False]
        return self._echelon

    def _reduced(self):
        """(rref rows, pivot list), cached."""
        state = self._forward()
        if not state[2]:
            if isinstance(state[0], np.ndarray):
                _back_substitute_modp(state[0], state[1], self.field.modulus)
            else:
                _back_substitute_generic(state[0], state[1], self.field)
            state[2] = True
        return state[0], state[1]

    def rank(self) -> int:
        return len(self._forward()[1])

    def rref(self):
        rows, piv = self._reduced()
        if isinstance(rows, np.ndarray):
            return rows[: len(piv)].copy(), list(piv)
        return [list(r) for r in rows[: len(piv)]], list(piv)

    def kernel(self) -> list[list]:
        """Basis of the right kernel, one vector per free column, in
        RREF-normalized form (free coordinate set to 1)."""
        rows, piv = self._reduced()
        n = self.ncols
        pivset = set(piv)
        free = [c for c in range(n) if c not in pivset]
        fld = self.field
        out = []
        if isinstance(rows, np.ndarray):
            p = fld.modulus
            for fc in free:
                v = np.zeros(n, dtype=np.int64)
                v[fc] = 1
                for r, c in enumerate(piv):
                    v[c] = (-int(rows[r, fc])) % p
                out.append([int(x) for x in v])
        else:
            for fc in free:
                v = [fld.zero] * n
                v[fc] = fld.one
                for r, c in enumerate(piv):
                    v[c] = fld.neg(rows[r][fc])
                out.append(v)
        return out

    def solve(self, rhs):
        """One solution of A x = rhs, or None if inconsistent."""
        fld = self.field
        if isinstance(self.data, np.ndarray):
            p = fld.modulus
            aug = np.concatenate([self.data, _as_array([list(rhs)], p).T], axis=1)
            piv = _ref_modp(aug, p)
            _back_substitute_modp(aug, piv, p)
        else:
            aug = [list(r) + [v] for r, v in zip(self.data, rhs)]
            piv = _ref_generic(aug, fld)
            _back_substitute_generic(aug, piv, fld)
        n = self.ncols
        if n in piv:
            return None
        x = [fld.zero] * n
        if isinstance(self.data, np.ndarray):
            for r, c in enumerate(piv):
                x[c] = int(aug[r, n])
        else:
            for r, c in enumerate(piv):
                x[c] = aug[r][n]
        return x

    def row_basis(self):
        rows, piv = self._reduced()
        if isinstance(rows, np.ndarray):
            return [[int(x) for x in rows[r]] for r in range(len(piv))]
        return [list(rows[r]) for r in range(len(piv))]


def matrix(fld: Field, rows, provenance: str = "") -> ExactMatrix:
    return ExactMatrix.build(fld, rows, provenance)


def rank(fld: Field, rows) -> int:
    return ExactMatrix.build(fld, rows).rank()


def kernel(fld: Field, rows) -> list[list]:
    return ExactMatrix.build(fld, rows).kernel()


def span_contains(fld: Field, basis, vec) -> bool:
    if not basis:
        return all(fld.is_zero(x) for x in vec)
    base = ExactMatrix.build(fld, basis).rank()
    return ExactMatrix.build(fld, list(basis) + [list(vec)]).rank() == base


def span_equal(fld: Field, rows_a, rows_b) -> bool:
    ra = ExactMatrix.build(fld, rows_a).rank() if rows_a else 0
    rb = ExactMatrix.build(fld, rows_b).rank() if rows_b else 0
    if ra != rb:
        return False
    joint = [list(r) for r in rows_a] + [list(r) for r in rows_b]
    if not joint:
        return True
    return ExactMatrix.build(fld, joint).rank() == ra


class RowSpanModP:
    """Incremental row space mod p.  Holds an RREF basis; chunks of new
    rows are reduced against it with one matrix product each."""

    def __init__(self, p: int, ncols: int):
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_rows(self, chunk: np.ndarray) -> int:
        """Insert rows; returns the rank gained."""
        p = self.p
        chunk = chunk % p
        if self.rank:
            coef = chunk[:, self.pivots]
            chunk = (chunk - _matmul_modp(coef, self.rows, p)) % p
        piv = _ref_modp(chunk, p)
        if not piv:
            return 0
        _back_substitute_modp(chunk, piv, p)
        new = chunk[: len(piv)]
        # clear the new pivot columns from the old basis to stay in RREF
        if self.rank:
            coef = self.rows[:, piv] % p
            if np.any(coef):
                self.rows = (self.rows - _matmul_modp(coef, new, p)) % p
        merged = np.concatenate([self.rows, new], axis=0)
        order = np.argsort(self.pivots + piv, kind="stable")
        self.rows = merged[order]
        self.pivots = sorted(self.pivots + piv)
        return len(piv)
