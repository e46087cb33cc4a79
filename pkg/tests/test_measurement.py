"""Unit tests for the projective measurement and the Bell-state swap.

The swap formulas are checked against a brute-force oracle that builds all
sixteen amplitudes of the four spectator ions (1,4,5,8) and applies the Bell
projector on ions (4,5) explicitly.
"""

import numpy as np
import pytest

from ionrepeater.errors import DegenerateStateError
from ionrepeater.ionstate import (PAIR_BASIS, AmplitudeFamilies, PairState,
                                  initial_protocol_families)
from ionrepeater.measurement import (BellChoice, MeasuredPair, ProtocolRecord,
                                     SwapOutcome, project_pair, run_protocol,
                                     swap_bsm, swap_from_families)
from ionrepeater.params import ModelParams

E, G = 0, 1
LETTER_INDEX = {"E": E, "G": G}


def bell_projection_oracle(a: PairState, b: PairState, bell: BellChoice) -> PairState:
    """Unnormalized end-pair state from the explicit 16-amplitude projection."""
    amp = np.zeros((2, 2, 2, 2), dtype=complex)  # indices (s1, s4, s5, s8)
    av, bv = a.as_array(), b.as_array()
    for ka, lab_a in enumerate(PAIR_BASIS):
        s1, s4 = LETTER_INDEX[lab_a[0]], LETTER_INDEX[lab_a[1]]
        for kb, lab_b in enumerate(PAIR_BASIS):
            s5, s8 = LETTER_INDEX[lab_b[0]], LETTER_INDEX[lab_b[1]]
            amp[s1, s4, s5, s8] += av[ka] * bv[kb]
    proj = np.zeros((2, 2), dtype=complex)  # Bell component on (s4, s5)
    comps = ((E, E), (G, G)) if bell is BellChoice.PSI_EEGG else ((E, G), (G, E))
    for s4, s5 in comps:
        proj[s4, s5] = 1.0 / np.sqrt(2.0)
    end = np.einsum("iabj,ab->ij", amp, proj.conj())
    return PairState(end[E, G], end[G, E], end[G, G], end[E, E])


def random_pair(rng) -> PairState:
    c = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return PairState(*c).normalized()


def test_swap_matches_projection_oracle():
    rng = np.random.default_rng(41)
    for _ in range(60):
        a, b = random_pair(rng), random_pair(rng)
        for bell in BellChoice:
            out = swap_bsm(a, b, bell)
            oracle = bell_projection_oracle(a, b, bell)
            assert abs(out.prob - oracle.norm_sq()) < 1e-12
            assert abs(out.n_factor - 2.0 * oracle.norm_sq()) < 1e-12
            if oracle.norm_sq() > 1e-10:
                assert abs(out.conc - oracle.concurrence()) < 1e-12
                overlap = abs(np.vdot(oracle.normalized().as_array(),
                                      out.state.as_array()))
                assert abs(overlap - 1.0) < 1e-12


def test_swap_probabilities_are_bounded():
    rng = np.random.default_rng(43)
    for _ in range(60):
        a, b = random_pair(rng), random_pair(rng)
        p1 = swap_bsm(a, b, BellChoice.PSI_EEGG).prob
        p2 = swap_bsm(a, b, BellChoice.PSI_EGGE).prob
        assert -1e-12 <= p1 <= 1.0 + 1e-12
        assert -1e-12 <= p2 <= 1.0 + 1e-12
        # two of the four Bell outcomes can never exhaust the ensemble
        assert p1 + p2 <= 1.0 + 1e-12


def test_swap_of_two_bell_pairs():
    bell_in = PairState(1.0, 1.0, 0.0, 0.0).normalized()
    out = swap_bsm(bell_in, bell_in, BellChoice.PSI_EEGG)
    assert abs(out.prob - 0.25) < 1e-12
    assert abs(out.conc - 1.0) < 1e-12
    # the swapped pair lands on (|GG> + |EE>)/sqrt(2)
    expect = np.array([0.0, 0.0, 1.0, 1.0]) / np.sqrt(2.0)
    assert abs(abs(np.vdot(expect, out.state.as_array())) - 1.0) < 1e-12


def test_swap_zero_probability_branch():
    pure = PairState(1.0, 0.0, 0.0, 0.0)  # |EG> on both pairs
    out = swap_bsm(pure, pure, BellChoice.PSI_EEGG)
    assert out.prob == 0.0
    assert out.degenerate and out.conc is None
    assert out.state.norm_sq() < 1e-24
    # the complementary projector picks the branch up with certainty / 2
    other = swap_bsm(pure, pure, BellChoice.PSI_EGGE)
    assert abs(other.prob - 0.5) < 1e-12
    assert other.conc < 1e-12


def test_swap_rejects_unnormalizable_input():
    zero = PairState(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(DegenerateStateError):
        swap_bsm(zero, PairState(1.0, 0.0, 0.0, 0.0), BellChoice.PSI_EEGG)


def test_swap_scale_invariance():
    # swap_bsm normalizes internally, so input scaling must not matter
    rng = np.random.default_rng(47)
    a, b = random_pair(rng), random_pair(rng)
    for bell in BellChoice:
        ref = swap_bsm(a, b, bell)
        scaled = swap_bsm(a.scaled(0.3j), b.scaled(-2.0), bell)
        assert abs(ref.prob - scaled.prob) < 1e-12
        assert abs(ref.conc - scaled.conc) < 1e-12


def test_project_pair_initial_state():
    f = initial_protocol_families()
    probs = []
    for i in range(1, 5):
        mp = project_pair(f, i)
        assert isinstance(mp, MeasuredPair)
        assert mp.outcome == i
        assert abs(mp.prob - 0.25) < 1e-15
        assert not mp.degenerate
        assert mp.conc < 1e-15  # conditional states are product states
        probs.append(mp.prob)
    assert abs(sum(probs) - 1.0) < 1e-12


def test_project_pair_completeness_random():
    rng = np.random.default_rng(53)
    for _ in range(20):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m /= np.linalg.norm(m)
        f = AmplitudeFamilies(m)
        total = sum(project_pair(f, i).prob for i in range(1, 5))
        assert abs(total - 1.0) < 1e-12


def test_project_pair_degenerate_branch():
    m = 0.5 * np.eye(4, dtype=complex)
    m[2, :] = 0.0
    m /= np.linalg.norm(m)
    f = AmplitudeFamilies(m)
    mp = project_pair(f, 3)
    assert mp.degenerate and mp.conc is None and mp.prob < 1e-12


def test_swap_from_families_initial():
    rec = swap_from_families(initial_protocol_families(), 1, 1, t=0.0)
    assert isinstance(rec, ProtocolRecord) and rec.t == 0.0
    assert abs(rec.pair_i.prob - 0.25) < 1e-15
    assert abs(rec.pair_j.prob - 0.25) < 1e-15
    # both conditional states are |EG>: the EE/GG projector misses entirely,
    # the EG/GE projector fires with probability 1/2 on a product state
    assert rec.swap_psi.prob == 0.0 and rec.swap_psi.degenerate
    assert abs(rec.swap_psi_prime.prob - 0.5) < 1e-12
    assert rec.swap_psi_prime.conc < 1e-12


def test_swap_from_families_degenerate_pair():
    m = 0.5 * np.eye(4, dtype=complex)
    m[0, :] = 0.0
    m /= np.linalg.norm(m)
    rec = swap_from_families(AmplitudeFamilies(m), 1, 2)
    assert rec.pair_i.degenerate
    assert rec.swap_psi.prob == 0.0 and rec.swap_psi.degenerate
    assert rec.swap_psi_prime.prob == 0.0 and rec.swap_psi_prime.degenerate


def test_run_protocol_zero_time():
    rec0 = run_protocol(ModelParams(), 0.0, 1, 1)
    ref = swap_from_families(initial_protocol_families(), 1, 1)
    assert abs(rec0.pair_i.prob - ref.pair_i.prob) < 1e-15
    assert abs(rec0.swap_psi_prime.prob - ref.swap_psi_prime.prob) < 1e-15


def test_run_protocol_evolved():
    rec = run_protocol(ModelParams(), 2.0, 1, 1)
    assert rec.t == 2.0
    assert abs(rec.pair_i.prob - 0.25) < 1e-9
    assert abs(rec.pair_j.prob - 0.25) < 1e-9
    total = rec.swap_psi.prob + rec.swap_psi_prime.prob
    assert total <= 1.0 + 1e-9
    for out in (rec.swap_psi, rec.swap_psi_prime):
        assert isinstance(out, SwapOutcome)
        if not out.degenerate:
            assert -1e-9 <= out.conc <= 1.0 + 1e-9


def test_run_protocol_rejects_negative_time():
    with pytest.raises(ValueError):
        run_protocol(ModelParams(), -1.0, 1, 1)
