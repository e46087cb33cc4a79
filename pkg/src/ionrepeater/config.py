"""Scenario configuration: flat key=value files plus CLI overrides.

The accepted keys are exactly

    g2, g3, E_P, G, omega_c, omega_M, nu, omega_0, omega_P,
    t_max, n_steps, outcome_i, outcome_j, bell, sweep_field, sweep_values

with '#' starting a comment.  CLI flags carry the same names with a leading
'--' and take precedence over file values.  All validation failures raise
:class:`~ionrepeater.errors.ConfigError` naming the offending field.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ConfigError, NonpositiveDetuningError
from .params import ModelParams, derived_frequencies

#: Config key -> ModelParams attribute.
PARAM_KEYS = {
    "g2": "g2",
    "g3": "g3",
    "E_P": "e_p",
    "G": "g_om",
    "omega_c": "omega_c",
    "omega_M": "omega_m",
    "nu": "nu",
    "omega_0": "omega_0",
    "omega_P": "omega_p",
}

SCENARIO_KEYS = ("t_max", "n_steps", "outcome_i", "outcome_j", "bell",
                 "sweep_field", "sweep_values")

ALL_KEYS = tuple(PARAM_KEYS) + SCENARIO_KEYS

BELL_CHOICES = ("both", "PSI_EEGG", "PSI_EGGE")


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully validated inputs of one simulation scenario."""

    params: ModelParams
    t_max: float = 50.0
    n_steps: int = 2000
    outcome_i: int = 1
    outcome_j: int = 1
    bell: str = "both"
    sweep_field: str | None = None
    sweep_values: tuple[float, ...] | None = None

    def sweep_points(self) -> list["ScenarioConfig"]:
        """One sweep-free config per sweep value, with the field substituted."""
        if self.sweep_field is None or self.sweep_values is None:
            raise ConfigError("sweep_field and sweep_values are required for a sweep")
        attr = PARAM_KEYS[self.sweep_field]
        points = []
        for v in self.sweep_values:
            params = _validated_params(replace(self.params, **{attr: v}),
                                       field=self.sweep_field)
            points.append(replace(self, params=params, sweep_field=None,
                                  sweep_values=None))
        return points


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Raw key -> value strings from a flat config file.

    Later assignments override earlier ones; unknown keys are rejected.
    """
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ALL_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from exc


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected an integer, got {raw!r}") from exc


def _validated_params(params: ModelParams, field: str | None = None) -> ModelParams:
    try:
        derived_frequencies(params)
    except NonpositiveDetuningError as exc:
        prefix = f"{field}: " if field else ""
        raise ConfigError(f"{prefix}{exc}") from exc
    return params


def build_scenario(values: dict[str, str]) -> ScenarioConfig:
    """Validate raw strings (file values merged with overrides) into a config."""
    for key in values:
        if key not in ALL_KEYS:
            raise ConfigError(f"unknown key {key!r}")

    kwargs = {}
    for key, attr in PARAM_KEYS.items():
        if key in values:
            v = _parse_float(key, values[key])
            if v < 0:
                raise ConfigError(f"{key}: must be nonnegative, got {v:g}")
            kwargs[attr] = v
    try:
        params = ModelParams(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    params = _validated_params(params)

    t_max = _parse_float("t_max", values.get("t_max", "50"))
    if t_max <= 0:
        raise ConfigError(f"t_max: must be positive, got {t_max:g}")
    n_steps = _parse_int("n_steps", values.get("n_steps", "2000"))
    if n_steps < 2:
        raise ConfigError(f"n_steps: must be >= 2, got {n_steps}")
    outcomes = {}
    for key in ("outcome_i", "outcome_j"):
        val = _parse_int(key, values.get(key, "1"))
        if val not in (1, 2, 3, 4):
            raise ConfigError(f"{key}: must be in 1..4, got {val}")
        outcomes[key] = val
    bell = values.get("bell", "both")
    if bell not in BELL_CHOICES:
        raise ConfigError(f"bell: must be one of {'|'.join(BELL_CHOICES)}, got {bell!r}")

    sweep_field = values.get("sweep_field")
    sweep_values: tuple[float, ...] | None = None
    if sweep_field is not None and sweep_field not in PARAM_KEYS:
        raise ConfigError(
            f"sweep_field: {sweep_field!r} is not a model parameter "
            f"(choose from {', '.join(PARAM_KEYS)})"
        )
    if "sweep_values" in values:
        parts = [s.strip() for s in values["sweep_values"].split(",") if s.strip()]
        if not parts:
            raise ConfigError("sweep_values: expected a comma-separated list of numbers")
        sweep_values = tuple(_parse_float("sweep_values", s) for s in parts)
    if (sweep_field is None) != (sweep_values is None):
        raise ConfigError("sweep_field and sweep_values must be given together")

    return ScenarioConfig(params=params, t_max=t_max, n_steps=n_steps,
                          outcome_i=outcomes["outcome_i"],
                          outcome_j=outcomes["outcome_j"], bell=bell,
                          sweep_field=sweep_field, sweep_values=sweep_values)


def load_scenario(config_path: str | Path | None,
                  overrides: dict[str, str] | None = None) -> ScenarioConfig:
    """Config file (optional) merged with CLI overrides, validated."""
    values = parse_config_file(config_path) if config_path else {}
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = val
    return build_scenario(values)
