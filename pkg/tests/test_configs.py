import pytest

from uxh.configs import (CATALOG_NAMES, catalog, config_from_json,
                         config_requirements, coordinate_points,
                         fermat_arrangement_factors, h3_special_lines,
                         lines_through_config, normalize_point)
from uxh.field import FieldError, FieldSpec, default_field_specs, make_field

SIZES = {"b3": 9, "b4": 16, "d4": 12, "f4": 24, "h3": 15, "h4": 60,
         "extended-fermat": 28}


@pytest.fixture(scope="module")
def fields():
    return {
        "plain": make_field(FieldSpec(p=10007)),
        "golden": make_field(default_field_specs(golden=True)[0]),
        "zeta4": make_field(default_field_specs(zeta_order=4)[0]),
        "zeta5": make_field(default_field_specs(zeta_order=5)[0]),
    }


def field_for(name, fields, m=None):
    req = config_requirements(name, m)
    if req["golden"]:
        return fields["golden"]
    if req["zeta"] == 5:
        return fields["zeta5"]
    if req["zeta"]:
        return fields["zeta4"]
    return fields["plain"]


class TestCatalog:
    @pytest.mark.parametrize("name,count", sorted(SIZES.items()))
    def test_sizes(self, name, count, fields):
        cfg = catalog(name, field_for(name, fields))
        assert len(cfg) == count
        assert cfg.nvars == (4 if name in ("b4", "d4", "f4", "h4",
                                           "extended-fermat") else 3)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_fermat_sizes(self, m, fields):
        fld = field_for("fermat0", fields, m) if m >= 3 else fields["plain"]
        assert len(catalog("fermat0", fld, m=m)) == 3 * m
        assert len(catalog(f"fermat3:{m}", fld)) == 3 * m + 3

    def test_points_are_normalized_and_distinct(self, fields):
        for name in SIZES:
            cfg = catalog(name, field_for(name, fields))
            fld = cfg.field
            for p in cfg.points:
                assert normalize_point(fld, p) == p
            assert len(set(cfg.points)) == len(cfg)

    def test_case_and_parameter_forms(self, fields):
        fld = fields["plain"]
        assert catalog("B3", fld).points == catalog("b3", fld).points
        a = catalog("fermat3", fields["zeta4"], m=4)
        b = catalog("fermat3:4", fields["zeta4"])
        assert a.points == b.points

    def test_unknown_name(self, fields):
        with pytest.raises(FieldError, match="unknown catalog name"):
            catalog("e8", fields["plain"])

    def test_fermat_needs_parameter(self, fields):
        with pytest.raises(FieldError):
            catalog("fermat0", fields["plain"])

    def test_requirements(self):
        assert config_requirements("h3") == {"golden": True, "zeta": None}
        assert config_requirements("H4")["golden"]
        assert config_requirements("fermat3", 5) == {"golden": False,
                                                     "zeta": 5}
        assert config_requirements("fermat0", 2)["zeta"] is None
        assert config_requirements("extended-fermat")["zeta"] == 4
        assert not config_requirements("f4")["golden"]

    def test_catalog_names_cover_requirements(self):
        for name in CATALOG_NAMES:
            m = 3 if name.startswith("fermat") else None
            config_requirements(name, m)

    def test_over_rebuilds_on_another_prime(self, fields):
        cfg = catalog("b4", fields["plain"])
        other = make_field(FieldSpec(p=10009))
        moved = cfg.over(other)
        assert moved.field is other
        assert len(moved) == len(cfg)
        assert moved.source == cfg.source


def test_normalize_point():
    fld = make_field(FieldSpec(p=101))
    assert normalize_point(fld, (2, 4, 6)) == (fld.div(fld.element(2),
                                                       fld.element(6)),
                                               fld.div(fld.element(4),
                                                       fld.element(6)),
                                               fld.one)
    assert normalize_point(fld, (5, 0, 0)) == (1, 0, 0)
    with pytest.raises(FieldError):
        normalize_point(fld, (0, 0, 0))


def test_coordinate_points():
    assert coordinate_points(3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


class TestConfigFromJson:
    def test_roundtrip_through_json(self):
        fld = make_field(FieldSpec(p=10007))
        cfg = catalog("b3", fld)
        back = config_from_json(cfg.to_json(), fld)
        assert back.points == cfg.points
        assert back.name == "B3"

    def test_duplicate_point_rejected(self):
        fld = make_field(FieldSpec(p=10007))
        obj = {"N": 2, "points": [["1", "0", "1"], ["2", "0", "2"]]}
        with pytest.raises(FieldError, match="duplicate point"):
            config_from_json(obj, fld)

    def test_u_without_golden_gets_a_hint(self):
        fld = make_field(FieldSpec(p=10007))
        obj = {"N": 2, "points": [["u", "1", "1"]]}
        with pytest.raises(FieldError, match="golden"):
            config_from_json(obj, fld)

    def test_wrong_length_rejected(self):
        fld = make_field(FieldSpec(p=10007))
        with pytest.raises(FieldError, match="coordinates"):
            config_from_json({"N": 2, "points": [["1", "0"]]}, fld)

    def test_malformed_payload(self):
        fld = make_field(FieldSpec(p=10007))
        with pytest.raises(FieldError, match="malformed"):
            config_from_json({"points": []}, fld)


class TestArrangementStructure:
    def test_fermat_factors_multiply_count(self, fields):
        fld = fields["zeta4"]
        factors = fermat_arrangement_factors(fld, 4, 3)
        assert len(factors) == 12
        for f in factors:
            assert f.homogeneous_degree() == 1

    def test_dual_points_lie_on_no_factor(self, fields):
        # each dual point is the kernel of one linear factor; it must lie
        # on that line and the incidences must match the known counts
        fld = fields["zeta4"]
        cfg = catalog("fermat0", fld, m=4)
        lines = lines_through_config(cfg, 2)
        assert max(len(idx) for _, idx in lines) == 4

    def test_h3_lines_meet_five_points(self, fields):
        fld = fields["golden"]
        cfg = catalog("h3", fld)
        lines = lines_through_config(cfg, 5)
        assert len(lines) == 6
        special = h3_special_lines(fld)
        assert len(special) == 6
        for form in special:
            onit = [p for p in cfg.points
                    if fld.is_zero(form.evaluate(list(p)))]
            assert len(onit) == 5


def test_b3_contains_coordinate_and_sum_points():
    fld = make_field(FieldSpec(p=10007))
    pts = set(catalog("b3", fld).points)
    assert normalize_point(fld, (1, 1, 0)) in pts
    assert normalize_point(fld, (1, -1, 0)) in pts
    assert (1, 0, 0) in pts
    assert normalize_point(fld, (1, 1, 1)) not in pts
