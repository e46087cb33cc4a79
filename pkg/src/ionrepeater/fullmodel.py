"""Brute-force evolution under the full cavity-ion Hamiltonian.

This is the oracle side of the package: the complete model — free energies
plus photon pressure, two sideband couplings and the explicitly
time-dependent pump — integrated in the lab frame on a truncated product
space, with no rotating-frame or averaging approximations.  Comparing its
interaction-picture amplitudes on the vacuum/encoded block against the
reduced dynamics bounds the effective model's error and demonstrates the
expected improvement as the detunings grow relative to the couplings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .dynamics import evolve
from .errors import IntegratorError
from .fockspace import FockOperator, FockSpace
from .ionstate import initial_protocol_families
from .params import ModelParams

#: Default truncation for oracle runs (state dimension 3*3*4*4 = 144).
DEFAULT_SPACE_DIMS = (3, 3, 2)

#: Hard cap on the truncated state dimension.
MAX_STATE_DIM = 4096

#: Allowed |norm - 1| drift of the full-state integration.
FULL_NORM_TOL = 1e-7


def _check_dim(space: FockSpace, max_dim: int = MAX_STATE_DIM) -> None:
    if space.dim > max_dim:
        raise ValueError(
            f"truncated state dimension {space.dim} exceeds the cap {max_dim}"
        )


def coupling_hamiltonian(p: ModelParams, space: FockSpace, t: float) -> np.ndarray:
    """Lab-frame coupling H_1(t) as a plain matrix.

    H_1 = -G a^dag a (b + b^dag)
          + i sum_i g_i (a Sigma_+(i) - a^dag Sigma_-(i))
          - i E_P (a e^{+i w_p t} - a^dag e^{-i w_p t})
    """
    a, na, b = space.a, space.num_a, space.b
    h = -p.g_om * na @ (b + b.conj().T)
    for ion, g in ((2, p.g2), (3, p.g3)):
        sp, sm = space.sigma_plus(ion), space.sigma_minus(ion)
        h = h + 1j * g * (a @ sp - a.conj().T @ sm)
    pump = -1j * p.e_p * np.exp(1j * p.omega_p * t) * a
    return h + pump + pump.conj().T


def full_hamiltonian(p: ModelParams, space: FockSpace, t: float) -> FockOperator:
    """H_0 + H_1(t) on the truncated space (Hermitian at every t)."""
    _check_dim(space)
    return FockOperator(space.dims,
                        space.free_hamiltonian(p) + coupling_hamiltonian(p, space, t))


def protocol_vacuum_state(space: FockSpace) -> np.ndarray:
    """Vacuum bosonic modes with the ion pair in the equal family superposition.

    This is the full-space counterpart of summing the four protocol families:
    amplitude 1/2 on each of vacuum x {Phi^1..Phi^4}.
    """
    psi = np.zeros(space.dim, dtype=complex)
    for k in space.family_indices():
        psi[k] = 0.5
    return psi


def evolve_full(p: ModelParams, space: FockSpace, psi0: np.ndarray,
                t_grid: np.ndarray, rtol: float = 1e-10,
                atol: float = 1e-12) -> np.ndarray:
    """Integrate the full Schrodinger equation in the lab frame.

    Returns an array of shape (len(t_grid), dim) with one state per sample.
    Only the pump phases are time dependent, so the right-hand side splits
    into one static matrix and two phase-rotated pump matrices.

    Raises
    ------
    IntegratorError
        If the integrator reports failure or norm drift exceeds
        ``FULL_NORM_TOL``.
    """
    _check_dim(space)
    tg = np.asarray(t_grid, dtype=float)
    psi0 = np.asarray(psi0, dtype=complex)
    if abs(np.linalg.norm(psi0) - 1.0) > 1e-9:
        raise ValueError("psi0 must be normalized")

    pump_lower = -1j * p.e_p * space.a          # carries e^{+i w_p t}
    pump_raise = pump_lower.conj().T            # carries e^{-i w_p t}
    h_static = space.free_hamiltonian(p) + coupling_hamiltonian(p, space, 0.0) \
        - pump_lower - pump_raise

    def rhs(t, y):
        hy = h_static @ y
        hy += np.exp(1j * p.omega_p * t) * (pump_lower @ y)
        hy += np.exp(-1j * p.omega_p * t) * (pump_raise @ y)
        return -1j * hy

    sol = solve_ivp(rhs, (tg[0], tg[-1]), psi0, t_eval=tg, method="DOP853",
                    rtol=rtol, atol=atol)
    if not sol.success:
        raise IntegratorError(f"full-model integration failed: {sol.message}")
    states = sol.y.T
    norms = np.linalg.norm(states, axis=1)
    drift = float(np.max(np.abs(norms - 1.0)))
    if drift > FULL_NORM_TOL:
        raise IntegratorError(f"full-model norm drift {drift:.3e} exceeds {FULL_NORM_TOL}")
    return states


def interaction_amplitudes(p: ModelParams, space: FockSpace, states: np.ndarray,
                           t_grid: np.ndarray) -> np.ndarray:
    """Interaction-picture amplitudes on vacuum x {Phi^1..Phi^4}.

    Multiplies each projected amplitude by e^{+i E_k t} with E_k the free
    energy of that basis state, undoing the fast free rotation so the result
    is directly comparable with the reduced dynamics.
    """
    idx = space.family_indices()
    energies = space.free_energies(p)[idx]
    tg = np.asarray(t_grid, dtype=float)
    raw = states[:, idx]
    return raw * np.exp(1j * np.outer(tg, energies))


@dataclass(frozen=True)
class DeviationReport:
    """Per-sample disagreement between the full model and the reduced dynamics."""

    t_grid: np.ndarray
    deviation: np.ndarray  # max_k |full amplitude_k - reduced amplitude_k|
    leakage: np.ndarray    # population outside the vacuum/encoded block

    @property
    def max_deviation(self) -> float:
        return float(np.max(self.deviation))

    @property
    def max_leakage(self) -> float:
        return float(np.max(self.leakage))


def compare_to_effective(p: ModelParams, t_grid: np.ndarray,
                         space: FockSpace | None = None) -> DeviationReport:
    """Evolve the protocol state under both models and report the gap.

    The full model starts from ``protocol_vacuum_state``; the reduced model
    starts from the protocol families, whose row sums give the same equal
    superposition.  Amplitudes are compared in the interaction picture on
    the vacuum/encoded block, and the population that leaks out of that
    block is reported alongside.
    """
    if space is None:
        space = FockSpace(*DEFAULT_SPACE_DIMS)
    tg = np.asarray(t_grid, dtype=float)
    states = evolve_full(p, space, protocol_vacuum_state(space), tg)
    amps = interaction_amplitudes(p, space, states, tg)

    traj = evolve(p, initial_protocol_families(), tg)
    reduced = np.array([f.matrix.sum(axis=1) for f in traj.families])

    deviation = np.max(np.abs(amps - reduced), axis=1)
    block_pop = np.sum(np.abs(states[:, space.family_indices()]) ** 2, axis=1)
    leakage = 1.0 - block_pop
    return DeviationReport(t_grid=tg, deviation=deviation, leakage=leakage)
