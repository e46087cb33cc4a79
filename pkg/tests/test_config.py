"""Unit tests for config-file parsing and scenario validation."""

import pytest

from ionrepeater.config import (ALL_KEYS, PARAM_KEYS, ScenarioConfig,
                                build_scenario, load_scenario,
                                parse_config_file)
from ionrepeater.errors import ConfigError
from ionrepeater.params import ModelParams


def write(tmp_path, text):
    path = tmp_path / "scenario.cfg"
    path.write_text(text)
    return path


def test_key_inventory():
    assert ALL_KEYS == ("g2", "g3", "E_P", "G", "omega_c", "omega_M", "nu",
                        "omega_0", "omega_P", "t_max", "n_steps", "outcome_i",
                        "outcome_j", "bell", "sweep_field", "sweep_values")


def test_parse_comments_blanks_and_duplicates(tmp_path):
    path = write(tmp_path, """
# full-line comment
g2 = 1.0   # trailing comment
E_P = 0.5

E_P = 2.5
""")
    values = parse_config_file(path)
    assert values == {"g2": "1.0", "E_P": "2.5"}  # later assignment wins


def test_parse_unknown_key_names_line(tmp_path):
    path = write(tmp_path, "g2 = 1.0\nbogus = 3\n")
    with pytest.raises(ConfigError, match=r":2: unknown key 'bogus'"):
        parse_config_file(path)


def test_parse_missing_equals(tmp_path):
    path = write(tmp_path, "g2 1.0\n")
    with pytest.raises(ConfigError, match=r":1: expected 'key = value'"):
        parse_config_file(path)


def test_missing_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config file"):
        parse_config_file(tmp_path / "absent.cfg")


def test_empty_scenario_uses_defaults():
    cfg = build_scenario({})
    assert cfg.params == ModelParams()
    assert cfg.t_max == 50.0
    assert cfg.n_steps == 2000
    assert (cfg.outcome_i, cfg.outcome_j) == (1, 1)
    assert cfg.bell == "both"
    assert cfg.sweep_field is None and cfg.sweep_values is None


def test_param_key_mapping():
    cfg = build_scenario({"E_P": "2.5", "G": "0.3", "omega_M": "1.5",
                          "omega_P": "0.1", "omega_c": "2.0", "nu": "0.4",
                          "omega_0": "0.6", "g2": "0.9", "g3": "1.1"})
    p = cfg.params
    assert (p.e_p, p.g_om, p.omega_m, p.omega_p) == (2.5, 0.3, 1.5, 0.1)
    assert (p.omega_c, p.nu, p.omega_0, p.g2, p.g3) == (2.0, 0.4, 0.6, 0.9, 1.1)


@pytest.mark.parametrize("values,fragment", [
    ({"t_max": "0"}, "t_max"),
    ({"t_max": "-2"}, "t_max"),
    ({"t_max": "soon"}, "t_max"),
    ({"n_steps": "1"}, "n_steps"),
    ({"n_steps": "2.5"}, "n_steps"),
    ({"outcome_i": "0"}, "outcome_i"),
    ({"outcome_j": "5"}, "outcome_j"),
    ({"bell": "PHI"}, "bell"),
    ({"g2": "-1"}, "g2"),
    ({"E_P": "much"}, "E_P"),
    ({"sweep_field": "t_max", "sweep_values": "1,2"}, "sweep_field"),
    ({"sweep_field": "E_P"}, "together"),
    ({"sweep_values": "1,2"}, "together"),
    ({"sweep_field": "E_P", "sweep_values": " , "}, "sweep_values"),
])
def test_field_validation_errors(values, fragment):
    with pytest.raises(ConfigError, match=fragment):
        build_scenario(values)


def test_unknown_override_key_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        build_scenario({"tmax": "50"})


def test_nonpositive_detuning_is_config_error():
    # pump on resonance with the cavity leaves no pump detuning
    with pytest.raises(ConfigError, match="omega_4"):
        build_scenario({"omega_P": "0.8"})


def test_overrides_take_precedence(tmp_path):
    path = write(tmp_path, "E_P = 0.5\nn_steps = 100\n")
    cfg = load_scenario(path, {"E_P": "5.0", "bell": "PSI_EEGG"})
    assert cfg.params.e_p == 5.0
    assert cfg.n_steps == 100
    assert cfg.bell == "PSI_EEGG"
    # None-valued overrides are ignored
    cfg2 = load_scenario(path, {"E_P": None})
    assert cfg2.params.e_p == 0.5


def test_load_without_file():
    cfg = load_scenario(None, {"omega_M": "4.0", "omega_c": "8.0", "nu": "2.0",
                               "omega_0": "2.0", "omega_P": "4.0"})
    assert cfg.params == ModelParams.uniform_detuning(4.0)


def test_sweep_points_substitution():
    cfg = build_scenario({"sweep_field": "E_P", "sweep_values": "0.5, 5",
                          "n_steps": "100", "bell": "PSI_EEGG"})
    assert cfg.sweep_values == (0.5, 5.0)
    points = cfg.sweep_points()
    assert [pt.params.e_p for pt in points] == [0.5, 5.0]
    for pt in points:
        assert pt.sweep_field is None and pt.sweep_values is None
        assert pt.n_steps == 100 and pt.bell == "PSI_EEGG"


def test_sweep_points_validate_each_value():
    cfg = build_scenario({"sweep_field": "omega_P", "sweep_values": "0.4, 0.8"})
    with pytest.raises(ConfigError, match="omega_P"):
        cfg.sweep_points()  # 0.8 collides with the default omega_c


def test_sweep_points_require_sweep():
    with pytest.raises(ConfigError):
        ScenarioConfig(params=ModelParams()).sweep_points()
