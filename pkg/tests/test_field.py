import pytest
from hypothesis import given, strategies as st

from uxh.field import (FieldError, FieldSpec, GoldenExtension, PrimeField,
                       RootExtension, default_field_specs, golden_conjugate,
                       make_field)


def test_golden_ratio_in_fp():
    fld = make_field(FieldSpec(p=22621, extension="golden"))
    u = fld.golden_ratio()
    assert u == 1873
    assert fld.mul(u, u) == fld.add(u, fld.one)


def test_golden_needs_quadratic_extension_mod_2():
    fld = make_field(FieldSpec(p=2, extension="golden"))
    assert isinstance(fld, GoldenExtension)
    u = fld.golden_ratio()
    assert fld.mul(u, u) == fld.add(u, fld.one)


def test_golden_without_extension_fails():
    with pytest.raises(FieldError):
        PrimeField(7).golden_ratio()


def test_conjugate_is_other_root():
    fld = make_field(FieldSpec(p=10009, extension="golden"))
    v = golden_conjugate(fld)
    assert fld.mul(v, v) == fld.add(v, fld.one)
    assert v != fld.golden_ratio()


@pytest.mark.parametrize("m", [3, 4, 5, 7])
def test_root_of_unity_orders(m):
    spec = default_field_specs(zeta_order=m)[0]
    fld = make_field(spec)
    z = fld.root_of_unity(m)
    w = z
    for k in range(1, m):
        assert not fld.is_zero(fld.sub(w, fld.one)) or k == m
        w = fld.mul(w, z)
    assert w == fld.one


def test_root_extension_when_prime_lacks_roots():
    # 7 has no 5th roots of unity (5 does not divide 6)
    fld = make_field(FieldSpec(p=7, extension="zeta", zeta_order=5))
    assert isinstance(fld, RootExtension)
    z = fld.root_of_unity(5)
    assert fld.pow(z, 5) == fld.one
    assert fld.pow(z, 1) != fld.one


def test_default_specs_pick_splitting_primes():
    specs = default_field_specs(golden=True, count=3)
    assert [s.p % 5 in (1, 4) for s in specs] == [True] * 3
    assert len({s.p for s in specs}) == 3
    for s in specs:
        fld = make_field(s)
        assert isinstance(fld, PrimeField)


def test_rationals():
    fld = make_field(FieldSpec(p=0))
    half = fld.div(fld.one, fld.element(2))
    assert fld.add(half, half) == fld.one
    with pytest.raises(FieldError):
        make_field(FieldSpec(p=0, extension="golden"))


def test_nonprime_rejected():
    with pytest.raises(FieldError):
        make_field(FieldSpec(p=10))


def test_rng_is_purpose_and_seed_stable():
    fld = make_field(FieldSpec(p=10007))
    a = [fld.rng(3, "x").randrange(10007) for _ in range(2)]
    assert a[0] == a[1]
    assert fld.rng(3, "x").randrange(10007) != fld.rng(4, "x").randrange(10007) \
        or fld.rng(3, "y").randrange(10007) != fld.rng(3, "x").randrange(10007)


def test_spec_json_roundtrip():
    for spec in (FieldSpec(p=10007), FieldSpec(p=10009, extension="golden"),
                 FieldSpec(p=10037, extension="zeta", zeta_order=4, seed=7)):
        assert FieldSpec.from_json(spec.to_json()) == spec


def test_parse_fmt_roundtrip():
    fld = make_field(FieldSpec(p=10009, extension="golden"))
    for text in ("3", "-1", "u", "u^2", "2*u - 1"):
        v = fld.parse(text)
        assert fld.parse(fld.fmt(v)) == v


class TestFieldAxioms:
    @given(st.integers(), st.integers(), st.integers())
    def test_prime_field_ring_axioms(self, a, b, c):
        fld = make_field(FieldSpec(p=10007))
        x, y, z = fld.element(a), fld.element(b), fld.element(c)
        assert fld.add(x, y) == fld.add(y, x)
        assert fld.mul(x, fld.add(y, z)) == fld.add(fld.mul(x, y),
                                                    fld.mul(x, z))
        if not fld.is_zero(x):
            assert fld.mul(x, fld.inv(x)) == fld.one

    @given(st.integers(), st.integers())
    def test_extension_axioms(self, a, b):
        fld = make_field(FieldSpec(p=3, extension="golden"))
        u = fld.golden_ratio()
        x = fld.add(fld.element(a), fld.mul(fld.element(b), u))
        y = fld.sub(fld.element(b), u)
        assert fld.sub(fld.add(x, y), y) == x
        if not fld.is_zero(x):
            assert fld.mul(x, fld.inv(x)) == fld.one
