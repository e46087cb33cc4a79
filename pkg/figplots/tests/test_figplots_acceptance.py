"""Acceptance check: regenerate the three regime datasets and render them.

The datasets are produced by the simulator's command-line interface in a
subprocess, so this package touches only the CSV contract, never the
simulator's internals.
"""

import subprocess
import sys
import time

from figplots.cli import main

BASE_KEYS = """\
g2 = 1.0
g3 = 1.0
G = 1.0
t_max = 50
n_steps = 400
outcome_i = 1
outcome_j = 1
bell = both
"""

REGIMES = {
    "baseline": BASE_KEYS + """\
E_P = 0.5
omega_c = 0.8
omega_M = 0.4
nu = 0.2
omega_0 = 0.2
omega_P = 0.4
""",
    "large_detuning": BASE_KEYS + """\
E_P = 0.5
omega_c = 8.0
omega_M = 4.0
nu = 2.0
omega_0 = 2.0
omega_P = 4.0
""",
    "strong_pump": BASE_KEYS + """\
E_P = 5.0
omega_c = 0.8
omega_M = 0.4
nu = 0.2
omega_0 = 0.2
omega_P = 0.4
""",
}


def simulate_regime(tmp_path, name: str):
    """Run the simulator CLI for one regime and return its dataset path."""
    config = tmp_path / f"{name}.cfg"
    config.write_text(REGIMES[name])
    dataset = tmp_path / f"{name}.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "ionrepeater.cli", "simulate",
         "--config", str(config), "--out", str(dataset)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert dataset.exists()
    return dataset


def test_criterion_11_regime_figures(tmp_path, capsys):
    t0 = time.perf_counter()
    datasets = [simulate_regime(tmp_path, name) for name in REGIMES]
    out_dir = tmp_path / "figures"
    code = main(["render", *[str(d) for d in datasets], "--out", str(out_dir)])
    images = sorted(out_dir.glob("*.png"))
    elapsed = time.perf_counter() - t0

    ok = (
        code == 0
        and len(images) == len(datasets)
        and {img.stem for img in images} == set(REGIMES)
        and all(img.stat().st_size > 10_000 for img in images)
    )
    line = (
        f"CRITERION 11 {'PASS' if ok else 'FAIL'} — exit {code}, "
        f"{len(images)} images for {len(datasets)} regime datasets "
        f"[{elapsed:.2f}s]"
    )
    with capsys.disabled():
        print(line)
    assert ok, line
