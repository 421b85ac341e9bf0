"""Config parsing, validation, and suite selection tests."""

import pytest
import yaml

from wirebearing.config import CaseSuite, default_config_path, load_config
from wirebearing.errors import ConfigError


def load_default_dict():
    with open(default_config_path()) as fh:
        return yaml.safe_load(fh)


def write_config(tmp_path, data):
    path = tmp_path / "cfg.yaml"
    path.write_text(yaml.safe_dump(data))
    return str(path)


def test_default_suite_matches_case_matrix():
    suite = load_config(default_config_path())
    assert len(suite.definitions) == 10

    expected = {
        1: ("conventional", 0.943, None),
        2: ("conventional", 0.870, None),
        3: ("wire", 0.870, 0.1),
        4: ("wire", 0.943, 0.1),
        5: ("wire", 0.870, 0.3),
    }
    for d in suite.definitions:
        kind, s, mu_wr = expected[d.case_id]
        assert d.bearing_kind == kind
        assert d.geometry.osculation_inner == pytest.approx(s)
        assert d.geometry.osculation_outer == pytest.approx(s)
        assert d.mu_wire_ring == mu_wr
        assert d.mu_ball_raceway == 0.1
        assert d.pressure_limit == 4200.0
        if d.boundary_condition == "clamped":
            assert d.compliance.hoop_flexibility == 0.0
        else:
            assert d.compliance.hoop_flexibility > 0.0
    bcs = {d.boundary_condition for d in suite.definitions}
    assert bcs == {"clamped", "unclamped"}


def test_select_filters_and_preserves_order():
    suite = load_config(default_config_path())
    sel = suite.select(case_ids=[5, 3], boundary="unclamped")
    assert [d.case_id for d in sel.definitions] == [3, 5]
    assert all(d.boundary_condition == "unclamped" for d in sel.definitions)
    with pytest.raises(ConfigError):
        suite.select(case_ids=[9])


def test_unknown_top_level_key(tmp_path):
    data = load_default_dict()
    data["extra_block"] = 1
    with pytest.raises(ConfigError, match="unknown keys.*top level"):
        load_config(write_config(tmp_path, data))


def test_unknown_nested_key(tmp_path):
    data = load_default_dict()
    data["platform"]["grease"] = "lots"
    with pytest.raises(ConfigError, match="grease"):
        load_config(write_config(tmp_path, data))


def test_missing_required_key(tmp_path):
    data = load_default_dict()
    del data["platform"]["ball_count"]
    with pytest.raises(ConfigError, match="ball_count"):
        load_config(write_config(tmp_path, data))


def test_wrong_units_rejected(tmp_path):
    data = load_default_dict()
    data["units"] = "in-lbf-psi-deg"
    with pytest.raises(ConfigError, match="units"):
        load_config(write_config(tmp_path, data))


def test_osculation_out_of_range(tmp_path):
    data = load_default_dict()
    data["cases"][0]["osculation"] = 1.2
    with pytest.raises(ConfigError, match="osculation"):
        load_config(write_config(tmp_path, data))


def test_mu_wire_ring_on_conventional(tmp_path):
    data = load_default_dict()
    data["cases"][0]["mu_wire_ring"] = 0.1
    with pytest.raises(ConfigError, match="mu_wire_ring"):
        load_config(write_config(tmp_path, data))


def test_wire_case_without_mu_wire_ring(tmp_path):
    data = load_default_dict()
    del data["cases"][2]["mu_wire_ring"]
    with pytest.raises(ConfigError, match="mu_wire_ring"):
        load_config(write_config(tmp_path, data))


def test_duplicate_case_id(tmp_path):
    data = load_default_dict()
    data["cases"][1]["id"] = 1
    with pytest.raises(ConfigError, match="duplicate"):
        load_config(write_config(tmp_path, data))


def test_unknown_material_reference(tmp_path):
    data = load_default_dict()
    data["wire"]["ring_material"] = "unobtainium"
    with pytest.raises(ConfigError, match="unobtainium"):
        load_config(write_config(tmp_path, data))


def test_bad_boundary_condition(tmp_path):
    data = load_default_dict()
    data["boundary_conditions"] = ["clamped", "floating"]
    with pytest.raises(ConfigError, match="floating"):
        load_config(write_config(tmp_path, data))


def test_unparseable_file(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("units: [unclosed\n")
    with pytest.raises(ConfigError, match="parse"):
        load_config(str(path))


def test_missing_file():
    with pytest.raises(ConfigError, match="cannot read"):
        load_config("/nonexistent/nowhere.yaml")
