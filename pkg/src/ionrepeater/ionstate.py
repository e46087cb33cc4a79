"""Two-ion states in the two-level encoding and their entanglement measures.

Each trapped ion is described by the two combined internal/vibrational levels

    |E> = |e, 1>   (internal excited, one vibrational quantum)
    |G> = |g, 0>   (internal ground, vibrational vacuum)

which form a closed subspace under the sideband couplings used throughout the
package: the joint raising/lowering operators only connect |g,0> <-> |e,1>, so
|e,0> and |g,1> are never populated and are excluded from the state types.

Wire order (fixed everywhere): a pair state is the coefficient vector
(alpha, beta, gamma, eta) over the ordered basis

    [ |E>|G>, |G>|E>, |G>|G>, |E>|E> ].
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateStateError

#: Squared-norm threshold below which a state cannot be normalized.
NORM_EPS = 1e-12

#: Ordered two-ion basis labels matching the (alpha, beta, gamma, eta) coefficients.
PAIR_BASIS = ("EG", "GE", "GG", "EE")


class IonLevel(Enum):
    """The two encoded levels of a single ion. E sorts before G in pair indexing."""

    E = "E"
    G = "G"


@dataclass(frozen=True)
class PairState:
    """Possibly unnormalized state of an ion pair over the ``PAIR_BASIS`` order."""

    alpha: complex  # coeff of |E>|G>
    beta: complex   # coeff of |G>|E>
    gamma: complex  # coeff of |G>|G>
    eta: complex    # coeff of |E>|E>

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.eta], dtype=complex)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.as_array()) ** 2))

    def scaled(self, c: complex) -> "PairState":
        return PairState(c * self.alpha, c * self.beta, c * self.gamma, c * self.eta)

    def normalized(self) -> "PairState":
        n2 = self.norm_sq()
        if n2 <= NORM_EPS:
            raise DegenerateStateError(
                f"cannot normalize pair state with squared norm {n2:.3e}"
            )
        return self.scaled(1.0 / np.sqrt(n2))

    def concurrence(self) -> float:
        """Entanglement of the pair state, in [0, 1].

        For coefficients (alpha, beta, gamma, eta) the concurrence is
        2|eta*gamma - alpha*beta| / norm_sq, which is invariant under global
        rescaling, 0 for product states and 1 for maximally entangled ones.

        Raises
        ------
        DegenerateStateError
            If the squared norm is below ``NORM_EPS`` (a probability-zero
            branch, for which entanglement is undefined).
        """
        n2 = self.norm_sq()
        if n2 <= NORM_EPS:
            raise DegenerateStateError(
                f"concurrence undefined for squared norm {n2:.3e}"
            )
        return 2.0 * abs(self.eta * self.gamma - self.alpha * self.beta) / n2


def norm_sq(p: PairState) -> float:
    return p.norm_sq()


def concurrence(p: PairState) -> float:
    return p.concurrence()


#: Ordered measurement basis of the cavity ion pair (2,3): row k of an
#: AmplitudeFamilies matrix is conditioned on outcome state ``MEASURED_BASIS[k]``,
#: written in (ion 2, ion 3) letters.
MEASURED_BASIS = ("GE", "EG", "EE", "GG")


@dataclass(frozen=True)
class AmplitudeFamilies:
    """Joint amplitudes of the measured pair (2,3) and the spectator pair (1,4).

    ``matrix[k, f]`` is the amplitude of (measured basis state k) x (spectator
    basis state f). Rows follow ``MEASURED_BASIS``; columns follow
    ``PAIR_BASIS`` of the spectator pair, i.e. the four columns are the
    alpha-, beta-, gamma- and eta-families.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"family matrix must be 4x4, got {m.shape}")
        object.__setattr__(self, "matrix", m)

    def total_norm_sq(self) -> float:
        return float(np.sum(np.abs(self.matrix) ** 2))

    def family(self, name: str) -> np.ndarray:
        """Column of the matrix for family ``name`` in {'alpha','beta','gamma','eta'}."""
        cols = ("alpha", "beta", "gamma", "eta")
        if name not in cols:
            raise ValueError(f"unknown family {name!r}")
        return self.matrix[:, cols.index(name)].copy()

    def outcome_row(self, i: int) -> PairState:
        """Spectator-pair coefficients conditioned on measurement outcome i in 1..4."""
        if i not in (1, 2, 3, 4):
            raise ValueError(f"outcome index must be in 1..4, got {i}")
        row = self.matrix[i - 1, :]
        return PairState(row[0], row[1], row[2], row[3])


def initial_protocol_families() -> AmplitudeFamilies:
    """Families of the protocol's initial four-ion state.

    Expanding the product of two Bell-like pairs, each measured-pair basis
    state pairs up with exactly one spectator basis state with amplitude 1/2,
    so the matrix is (1/2) * identity and the total norm is 1.
    """
    return AmplitudeFamilies(0.5 * np.eye(4, dtype=complex))
