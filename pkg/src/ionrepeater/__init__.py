"""Trapped-ion quantum-repeater simulator in optomechanical cavities.

Core flow: two Bell-like ion pairs per repeater half evolve inside
optomechanical cavities under a reduced 4x4 generator
(:mod:`~ionrepeater.dynamics`), projective measurement of the cavity ions
conditions the spectator pairs, and a Bell-state measurement swaps the
entanglement onto the end pair (:mod:`~ionrepeater.measurement`).  The
reduced generator is derived numerically from the full model
(:mod:`~ionrepeater.effham`) and validated against brute-force evolution
(:mod:`~ionrepeater.fullmodel`).
"""

from .bellprep import PrepParams, apply_phase_gates, pair_evolution, prep_time, \
    prepared_state
from .config import ScenarioConfig, load_scenario
from .dynamics import Trajectory, evolve, propagator_const, s_matrix
from .effham import HarmonicTerm, effective_hamiltonian, harmonic_terms, vacuum_block
from .errors import ConfigError, DegenerateStateError, IntegratorError, \
    IonRepeaterError, NonpositiveDetuningError, TimeDependenceError
from .fockspace import FockOperator, FockSpace
from .fullmodel import DeviationReport, compare_to_effective, evolve_full, \
    full_hamiltonian, protocol_vacuum_state
from .ionstate import AmplitudeFamilies, IonLevel, PairState, concurrence, \
    initial_protocol_families, norm_sq
from .measurement import BellChoice, MeasuredPair, ProtocolRecord, SwapOutcome, \
    project_pair, run_protocol, swap_bsm, swap_from_families
from .params import FrequencySet, ModelParams, derived_frequencies
from .runner import ResultRow, ScenarioResult, count_local_maxima, run_scenario, \
    run_sweep, write_csv

__all__ = [
    "AmplitudeFamilies", "BellChoice", "ConfigError", "DegenerateStateError",
    "DeviationReport", "FockOperator", "FockSpace", "FrequencySet",
    "HarmonicTerm", "IntegratorError", "IonLevel", "IonRepeaterError",
    "MeasuredPair", "ModelParams", "NonpositiveDetuningError", "PairState",
    "PrepParams", "ProtocolRecord", "ResultRow", "ScenarioConfig",
    "ScenarioResult", "SwapOutcome", "TimeDependenceError", "Trajectory",
    "apply_phase_gates", "compare_to_effective", "concurrence",
    "count_local_maxima", "derived_frequencies", "effective_hamiltonian",
    "evolve", "evolve_full", "full_hamiltonian", "harmonic_terms",
    "initial_protocol_families", "load_scenario", "norm_sq", "pair_evolution",
    "prep_time", "prepared_state", "project_pair", "propagator_const",
    "protocol_vacuum_state", "run_protocol", "run_scenario", "run_sweep",
    "s_matrix", "swap_bsm", "swap_from_families", "vacuum_block", "write_csv",
]

__version__ = "0.1.0"
