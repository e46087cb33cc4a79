"""Command-line interface.

Subcommands
-----------
simulate        one scenario -> one CSV dataset
sweep           one scenario per sweep value -> one CSV file each
effham          print the derived generator and its vacuum-block derivation
oracle-compare  full-model vs reduced dynamics deviation as (t, deviation, leakage)
prep-bell       Bell-pair preparation trajectory as (t, C)

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .bellprep import PrepParams, pair_evolution, prep_time
from .config import ALL_KEYS, load_scenario
from .dynamics import s_matrix
from .effham import effective_hamiltonian, harmonic_terms, vacuum_block
from .errors import ConfigError, DegenerateStateError, IntegratorError, \
    NonpositiveDetuningError
from .fockspace import FockSpace
from .fullmodel import compare_to_effective
from .params import derived_frequencies
from .runner import run_scenario, run_sweep, summary_lines, write_csv


def _add_scenario_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", metavar="FILE", help="flat key=value config file")
    for key in ALL_KEYS:
        sp.add_argument(f"--{key}", metavar="VALUE",
                        help=f"override config key {key}")


def _overrides(args: argparse.Namespace) -> dict[str, str]:
    return {key: getattr(args, key) for key in ALL_KEYS
            if getattr(args, key, None) is not None}


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _print_matrix(label: str, m: np.ndarray) -> None:
    print(label)
    body = np.array2string(m, precision=6, suppress_small=True,
                           separator=", ", max_line_width=120)
    print("  " + body.replace("\n", "\n  "))


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = load_scenario(args.config, _overrides(args))
    if cfg.sweep_field is not None:
        raise ConfigError("sweep_field is set; use the 'sweep' subcommand")
    result = run_scenario(cfg)
    path = write_csv(result.rows, args.out)
    print(f"wrote {path}")
    for line in summary_lines(result):
        print(line)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = load_scenario(args.config, _overrides(args))
    outputs = run_sweep(cfg, args.out)
    for value, path, result in outputs:
        print(f"wrote {path}  ({cfg.sweep_field} = {format(value, 'g')})")
        for line in summary_lines(result):
            print("  " + line)
    return 0


def _cmd_effham(args: argparse.Namespace) -> int:
    cfg = load_scenario(args.config, _overrides(args))
    p = cfg.params
    fs = derived_frequencies(p)
    space = FockSpace(args.d_optical, args.d_mechanical, args.d_vib)
    terms = harmonic_terms(p, space)
    t = args.t

    print("derived detunings: " + "  ".join(
        f"omega_{k + 1} = {_fmt(fs.omega[k])}" for k in range(4)))
    print(f"harmonic terms on dims {space.dims} "
          f"(each contributes h e^(-i omega t) + h.c.):")
    for term in terms:
        print(f"  {term.label:<9} omega = {_fmt(term.omega):<16} "
              f"max|h| = {_fmt(float(np.max(np.abs(term.op.matrix))))}")
    h_eff = effective_hamiltonian(terms, fs, t)
    block = vacuum_block(h_eff)
    s = s_matrix(p, t)
    _print_matrix(f"reduced generator S(t) at gt = {_fmt(t)}:", s)
    _print_matrix("vacuum block of the effective Hamiltonian:", block)
    print(f"max |vacuum_block - S| = {_fmt(float(np.max(np.abs(block - s))))}")
    return 0


def _cmd_oracle_compare(args: argparse.Namespace) -> int:
    overrides = _overrides(args)
    overrides.setdefault("t_max", "5")
    overrides.setdefault("n_steps", "101")
    cfg = load_scenario(args.config, overrides)
    space = FockSpace(args.d_optical, args.d_mechanical, args.d_vib)
    t_grid = np.linspace(0.0, cfg.t_max, cfg.n_steps)
    report = compare_to_effective(cfg.params, t_grid, space=space)
    lines = ["t,deviation,leakage"]
    for t, dev, leak in zip(report.t_grid, report.deviation, report.leakage):
        lines.append(f"{_fmt(t)},{_fmt(dev)},{_fmt(leak)}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
        print(f"max deviation = {_fmt(report.max_deviation)}")
        print(f"max leakage = {_fmt(report.max_leakage)}")
    return 0


def _cmd_prep_bell(args: argparse.Namespace) -> int:
    try:
        pp = PrepParams(g=args.g, delta=args.delta)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if args.n_steps < 2:
        raise ConfigError(f"n_steps: must be >= 2, got {args.n_steps}")
    t_max = args.t_max
    if t_max is None:
        t_max = np.pi * pp.delta / (2.0 * pp.g ** 2)  # one full concurrence cycle
    elif t_max <= 0:
        raise ConfigError(f"t_max: must be positive, got {t_max:g}")
    lines = ["t,C"]
    for t in np.linspace(0.0, t_max, args.n_steps):
        lines.append(f"{_fmt(float(t))},{_fmt(pair_evolution(pp, float(t)).concurrence())}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
        print(f"prep time gt = {_fmt(prep_time(pp))}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ionrepeater",
        description="Trapped-ion quantum-repeater simulator in optomechanical cavities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("simulate", help="run one scenario and write its dataset")
    _add_scenario_flags(sp)
    sp.add_argument("--out", default="dataset.csv", help="output CSV path")
    sp.set_defaults(handler=_cmd_simulate)

    sp = sub.add_parser("sweep", help="run one scenario per sweep value")
    _add_scenario_flags(sp)
    sp.add_argument("--out", default="dataset",
                    help="output stem; files are <stem>_<field>=<value>.csv")
    sp.set_defaults(handler=_cmd_sweep)

    sp = sub.add_parser("effham",
                        help="print the reduced generator and its derivation check")
    _add_scenario_flags(sp)
    sp.add_argument("--t", type=float, default=0.0, help="time gt at which to evaluate")
    sp.add_argument("--d-optical", type=int, default=4)
    sp.add_argument("--d-mechanical", type=int, default=4)
    sp.add_argument("--d-vib", type=int, default=2)
    sp.set_defaults(handler=_cmd_effham)

    sp = sub.add_parser("oracle-compare",
                        help="full-model vs reduced-dynamics deviation report")
    _add_scenario_flags(sp)
    sp.add_argument("--out", default="-", help="output CSV path, or - for stdout")
    sp.add_argument("--d-optical", type=int, default=3)
    sp.add_argument("--d-mechanical", type=int, default=3)
    sp.add_argument("--d-vib", type=int, default=2)
    sp.set_defaults(handler=_cmd_oracle_compare)

    sp = sub.add_parser("prep-bell", help="Bell-pair preparation trajectory (t, C)")
    sp.add_argument("--g", type=float, default=1.0, help="ion-field coupling")
    sp.add_argument("--delta", type=float, default=1.0, help="dispersive detuning")
    sp.add_argument("--t-max", type=float, default=None,
                    help="horizon gt (default: one concurrence cycle)")
    sp.add_argument("--n-steps", type=int, default=201)
    sp.add_argument("--out", default="-", help="output CSV path, or - for stdout")
    sp.set_defaults(handler=_cmd_prep_bell)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NonpositiveDetuningError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (IntegratorError, DegenerateStateError, FloatingPointError,
            np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
