"""Projective measurement on the cavity pair and Bell-state swapping.

The protocol evolves two identical four-ion blocks.  Measuring the cavity
pair of each block in its product basis leaves the spectator pair in one of
four conditional states (`project_pair`), and a Bell-state measurement on one
ion from each block swaps the entanglement onto the two end ions
(`swap_bsm`).  Everything is deterministic: the full conditional ensemble is
reported, no outcome sampling happens anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dynamics import evolve
from .ionstate import NORM_EPS, AmplitudeFamilies, PairState, initial_protocol_families
from .params import ModelParams


class BellChoice(Enum):
    """The two Bell projectors applied to the middle ion pair.

    PSI_EEGG projects on (|EE> + |GG>)/sqrt(2), PSI_EGGE on (|EG> + |GE>)/sqrt(2).
    """

    PSI_EEGG = "PSI_EEGG"
    PSI_EGGE = "PSI_EGGE"


@dataclass(frozen=True)
class MeasuredPair:
    """Spectator-pair record conditioned on one measurement outcome.

    ``state`` keeps the unnormalized conditional amplitudes; ``prob`` is the
    Born probability (its squared norm, given a unit-norm joint state) and
    ``conc`` the concurrence, or None for a probability-zero branch.
    """

    outcome: int
    state: PairState
    prob: float
    conc: float | None

    @property
    def degenerate(self) -> bool:
        return self.conc is None


def project_pair(f: AmplitudeFamilies, i: int) -> MeasuredPair:
    """Project the cavity pair onto basis outcome ``i`` in 1..4.

    The conditional spectator state is row ``i-1`` of the family matrix read
    across the four family columns.  A branch with probability below the
    degeneracy threshold is returned flagged (conc None) rather than
    normalized into a fabricated state.
    """
    state = f.outcome_row(i)
    prob = state.norm_sq()
    if prob <= NORM_EPS:
        return MeasuredPair(outcome=i, state=state, prob=prob, conc=None)
    return MeasuredPair(outcome=i, state=state, prob=prob, conc=state.concurrence())


@dataclass(frozen=True)
class SwapOutcome:
    """End-pair record after the Bell-state measurement.

    ``n_factor`` is the squared norm of the projected (pre-normalization)
    coefficients built from unit-normalized inputs; the Born probability of
    the Bell outcome is then ``n_factor / 2``.  ``state`` is the normalized
    end-pair state, or the raw (zero) coefficients when the outcome has
    probability zero, in which case ``conc`` is None.
    """

    bell: BellChoice
    n_factor: float
    prob: float
    state: PairState
    conc: float | None

    @property
    def degenerate(self) -> bool:
        return self.conc is None


def _swap_coefficients(a: PairState, b: PairState, bell: BellChoice) -> PairState:
    # Coefficients of the end pair over [EG, GE, GG, EE], obtained by pairing
    # each input component with the Bell projector on the two middle ions.
    aa, ab, ag, ae = a.alpha, a.beta, a.gamma, a.eta
    ba, bb, bg, be = b.alpha, b.beta, b.gamma, b.eta
    if bell is BellChoice.PSI_EEGG:
        return PairState(
            aa * bg + ae * ba,
            ag * bb + ab * be,
            ag * bg + ab * ba,
            aa * bb + ae * be,
        )
    if bell is BellChoice.PSI_EGGE:
        return PairState(
            aa * ba + ae * bg,
            ag * be + ab * bb,
            ag * ba + ab * bg,
            aa * be + ae * bb,
        )
    raise ValueError(f"unknown Bell choice {bell!r}")


def swap_bsm(a: PairState, b: PairState, bell: BellChoice) -> SwapOutcome:
    """Bell-state measurement joining two spectator pairs.

    ``a`` holds ions (1,4) and ``b`` holds ions (5,8); the projector acts on
    ions (4,5).  Inputs are normalized internally, so with conditional states
    straight from ``project_pair`` the returned ``prob`` equals the joint
    Born probability of the Bell outcome divided by the product of the two
    projection probabilities, i.e. the conditional success probability.

    Raises
    ------
    DegenerateStateError
        If either input cannot be normalized.
    """
    an = a.normalized()
    bn = b.normalized()
    coeff = _swap_coefficients(an, bn, bell)
    n_factor = coeff.norm_sq()
    prob = 0.5 * n_factor
    if n_factor <= NORM_EPS:
        return SwapOutcome(bell=bell, n_factor=n_factor, prob=0.0,
                           state=coeff, conc=None)
    return SwapOutcome(bell=bell, n_factor=n_factor, prob=prob,
                       state=coeff.normalized(), conc=coeff.concurrence())


@dataclass(frozen=True)
class ProtocolRecord:
    """All measured quantities of one protocol run at a single time."""

    t: float
    pair_i: MeasuredPair   # ions (1,4), outcome of measuring (2,3)
    pair_j: MeasuredPair   # ions (5,8), outcome of measuring (6,7)
    swap_psi: SwapOutcome        # PSI_EEGG branch
    swap_psi_prime: SwapOutcome  # PSI_EGGE branch


def swap_from_families(f: AmplitudeFamilies, i: int, j: int,
                       t: float = 0.0) -> ProtocolRecord:
    """Measurement pipeline on already-evolved families.

    Both four-ion blocks evolve identically, so one family matrix serves for
    the (1,4) block (outcome ``i``) and the (5,8) block (outcome ``j``).
    """
    pair_i = project_pair(f, i)
    pair_j = project_pair(f, j)
    swaps = {}
    for bell in BellChoice:
        if pair_i.degenerate or pair_j.degenerate:
            zero = PairState(0.0, 0.0, 0.0, 0.0)
            swaps[bell] = SwapOutcome(bell=bell, n_factor=0.0, prob=0.0,
                                      state=zero, conc=None)
        else:
            swaps[bell] = swap_bsm(pair_i.state, pair_j.state, bell)
    return ProtocolRecord(t=t, pair_i=pair_i, pair_j=pair_j,
                          swap_psi=swaps[BellChoice.PSI_EEGG],
                          swap_psi_prime=swaps[BellChoice.PSI_EGGE])


def run_protocol(p: ModelParams, t: float, i: int, j: int) -> ProtocolRecord:
    """Evolve the protocol initial state to time ``t`` and measure.

    Returns the conditional pair records for outcomes ``i`` (ions 2,3) and
    ``j`` (ions 6,7) plus both Bell-swap branches for the end pair (1,8).
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    grid = [0.0, float(t)] if t > 0 else [0.0]
    traj = evolve(p, initial_protocol_families(), grid)
    return swap_from_families(traj.families[-1], i, j, t=float(t))
