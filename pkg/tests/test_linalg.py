import numpy as np
import pytest
from hypothesis import given, strategies as st

from uxh.field import FieldSpec, make_field
from uxh.linalg import (ExactMatrix, RowSpanModP, _matmul_modp, kernel,
                        matrix, rank, span_contains, span_equal)

FQ = make_field(FieldSpec(p=101))
FR = make_field(FieldSpec(p=0))


def brute_rank(fld, rows):
    """Independent elimination: no numpy, no pivot bookkeeping."""
    work = [list(r) for r in rows]
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if not fld.is_zero(work[i][c]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = fld.inv(work[r][c])
        work[r] = [fld.mul(inv, v) for v in work[r]]
        for i in range(len(work)):
            if i != r and not fld.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [fld.sub(a, fld.mul(f, b))
                           for a, b in zip(work[i], work[r])]
        r += 1
    return r


small = st.integers(min_value=-30, max_value=30)


@given(st.lists(st.lists(small, min_size=4, max_size=4),
                min_size=1, max_size=6))
def test_rank_matches_brute_force_both_backends(rows):
    for fld in (FQ, FR):
        vals = [[fld.element(v) for v in row] for row in rows]
        assert rank(fld, vals) == brute_rank(fld, vals)


@given(st.lists(st.lists(small, min_size=5, max_size=5),
                min_size=1, max_size=7))
def test_rank_nullity(rows):
    for fld in (FQ, FR):
        vals = [[fld.element(v) for v in row] for row in rows]
        m = matrix(fld, vals)
        assert m.rank() + len(m.kernel()) == 5


@given(st.lists(st.lists(small, min_size=4, max_size=4),
                min_size=2, max_size=6))
def test_kernel_vectors_annihilate(rows):
    fld = FQ
    vals = [[fld.element(v) for v in row] for row in rows]
    for vec in kernel(fld, vals):
        for row in vals:
            assert fld.is_zero(fld.dot(row, vec))


def test_solve_consistent_and_inconsistent():
    rows = [[FQ.element(v) for v in r] for r in [[1, 2], [3, 4], [4, 6]]]
    m = matrix(FQ, rows)
    sol = m.solve([FQ.element(v) for v in (3, 7, 10)])
    assert sol is not None
    assert [FQ.dot(r, sol) for r in rows] == [3, 7, 10]
    assert m.solve([FQ.element(v) for v in (3, 7, 11)]) is None


def test_span_helpers():
    a = [[1, 0, 1], [0, 1, 1]]
    b = [[1, 1, 2], [1, -1, 0]]
    ea = [[FQ.element(v) for v in r] for r in a]
    eb = [[FQ.element(v) for v in r] for r in b]
    assert span_equal(FQ, ea, eb)
    assert span_contains(FQ, ea, [FQ.element(v) for v in (2, 3, 5)])
    assert not span_contains(FQ, ea, [FQ.element(v) for v in (0, 0, 1)])


def test_row_span_incremental_matches_batch():
    p = 101
    rng = np.random.default_rng(5)
    a = rng.integers(0, p, size=(40, 17), dtype=np.int64)
    span = RowSpanModP(p, 17)
    for i in range(0, 40, 7):
        span.add_rows(a[i:i + 7])
    assert span.rank == ExactMatrix.build(make_field(FieldSpec(p=p)),
                                          a).rank()
    # adding rows already in the span gains nothing
    mix = rng.integers(0, p, size=(5, 40), dtype=np.int64)
    assert span.add_rows(mix @ a % p) == 0


@given(st.integers(min_value=2, max_value=40),
       st.integers(min_value=0, max_value=10 ** 6))
def test_matmul_modp_exact(n, seed):
    p = 22621
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, size=(3, n), dtype=np.int64)
    b = rng.integers(0, p, size=(n, 4), dtype=np.int64)
    assert np.array_equal(_matmul_modp(a, b, p), a @ b % p)


def test_rank_agrees_across_primes():
    rows = [[3, 1, 4, 1], [5, 9, 2, 6], [8, 10, 6, 7], [-2, -8, 2, -5]]
    ranks = set()
    for p in (10007, 10009):
        fld = make_field(FieldSpec(p=p))
        ranks.add(rank(fld, [[fld.element(v) for v in r] for r in rows]))
    assert len(ranks) == 1
