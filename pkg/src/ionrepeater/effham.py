"""Second-order effective Hamiltonian from the harmonic decomposition.

In the interaction picture of the free Hamiltonian, the coupling splits into
four harmonics

    H_int(t) = sum_n  h_n e^{-i w_n t} + h_n^dag e^{+i w_n t},

with w_1..w_4 the derived detunings of :func:`ionrepeater.params.derived_frequencies`.
Time-averaging to second order with the harmonic-mean weights gives

    H_eff(t) = sum_{m,n} (1/w_mn) [h_m^dag, h_n] e^{i(w_m - w_n) t},

a Hermitian operator containing photon-number-squared, optomechanical-cross,
sideband-exchange and pump terms.  Restricted to optical/mechanical vacuum
and the four encoded two-ion states, every photon-number-weighted and
mirror-displacing term annihilates the block and the 4x4 remainder is exactly
the reduced generator of :func:`ionrepeater.dynamics.s_matrix` — checked
numerically by the test suite for random parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fockspace import FockOperator, FockSpace
from .fullmodel import coupling_hamiltonian
from .params import FrequencySet, ModelParams, derived_frequencies

#: Harmonic labels in frequency order (w_1, w_2, w_3, w_4).
TERM_LABELS = ("optomech", "ion2", "ion3", "pump")


@dataclass(frozen=True)
class HarmonicTerm:
    """One harmonic h of the interaction picture: contributes h e^{-i w t} + h.c."""

    label: str
    omega: float
    op: FockOperator

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"harmonic frequency must be positive, got {self.omega}")


def harmonic_terms(p: ModelParams, space: FockSpace) -> tuple[HarmonicTerm, ...]:
    """The four harmonics of the interaction-picture coupling.

    h_1 = -G a^dag a b         at w_1 (mirror sideband of the photon pressure)
    h_2 = +i g2 a Sigma_+(2)   at w_2 (ion-2 sideband exchange)
    h_3 = +i g3 a Sigma_+(3)   at w_3 (ion-3 sideband exchange)
    h_4 = -i E_P a             at w_4 (pump)

    Reassembling sum(h e^{-iwt} + h.c.) reproduces the interaction picture of
    the full coupling exactly on the truncated space.
    """
    fs = derived_frequencies(p)
    mats = (
        -p.g_om * (space.num_a @ space.b),
        1j * p.g2 * (space.a @ space.sigma_plus(2)),
        1j * p.g3 * (space.a @ space.sigma_plus(3)),
        -1j * p.e_p * space.a,
    )
    return tuple(
        HarmonicTerm(label=lbl, omega=float(fs.omega[k]),
                     op=FockOperator(space.dims, m))
        for k, (lbl, m) in enumerate(zip(TERM_LABELS, mats))
    )


def assembled_interaction(terms: tuple[HarmonicTerm, ...], t: float) -> np.ndarray:
    """sum_n h_n e^{-i w_n t} + h_n^dag e^{+i w_n t} as a plain matrix."""
    dim = terms[0].op.matrix.shape[0]
    out = np.zeros((dim, dim), dtype=complex)
    for term in terms:
        rotated = term.op.matrix * np.exp(-1j * term.omega * t)
        out += rotated + rotated.conj().T
    return out


def conjugated_interaction(p: ModelParams, space: FockSpace, t: float) -> np.ndarray:
    """Interaction picture e^{i H0 t} H_1(t) e^{-i H0 t} by direct conjugation.

    H0 is diagonal in the product basis, so the conjugation is exact on the
    truncated space; this is the reference the harmonic decomposition is
    tested against.
    """
    energies = space.free_energies(p)
    phases = np.exp(1j * energies * t)
    h1 = coupling_hamiltonian(p, space, t)
    return (phases[:, None] * h1) * np.conj(phases)[None, :]


def effective_hamiltonian(terms: tuple[HarmonicTerm, ...], freqs: FrequencySet,
                          t: float) -> FockOperator:
    """Harmonic-mean commutator combination of the four harmonics at time t.

    Hermitian at every t because the (m,n) and (n,m) contributions are
    mutually adjoint and the harmonic-mean weights are symmetric.
    """
    dims = terms[0].op.dims
    dim = terms[0].op.matrix.shape[0]
    out = np.zeros((dim, dim), dtype=complex)
    hs = [term.op.matrix for term in terms]
    w = np.array([term.omega for term in terms])
    for m in range(4):
        hm_dag = hs[m].conj().T
        for n in range(4):
            if m == n == 3:
                # The pump self-commutator is a c-number (identity times
                # -E_P^2): a global energy shift with no effect on any
                # observable, dropped so the vacuum block matches the
                # reduced generator's zero-point convention.
                continue
            comm = hm_dag @ hs[n] - hs[n] @ hm_dag
            out += (1.0 / freqs.pair[m, n]) * np.exp(1j * (w[m] - w[n]) * t) * comm
    return FockOperator(dims, out)


def vacuum_block(h_eff: FockOperator) -> np.ndarray:
    """Restriction of an operator to vacuum x {Phi^1..Phi^4}.

    Returns the 4x4 block in measured-basis row order; for the effective
    Hamiltonian this equals the reduced generator S(t).
    """
    d_a, d_b, d_ion, _ = h_eff.dims
    space = FockSpace(d_a, d_b, d_ion // 2)
    idx = space.family_indices()
    return h_eff.matrix[np.ix_(idx, idx)]
