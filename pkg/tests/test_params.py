"""Unit tests for model parameters and the derived detuning frequencies."""

import numpy as np
import pytest

from ionrepeater.errors import NonpositiveDetuningError
from ionrepeater.params import (FrequencySet, ModelParams, UNIFORM_TOL,
                                derived_frequencies)


def test_default_parameters():
    p = ModelParams()
    assert (p.g2, p.g3, p.e_p, p.g_om) == (1.0, 1.0, 0.5, 1.0)
    assert (p.omega_c, p.omega_m, p.nu, p.omega_0, p.omega_p) == \
        (0.8, 0.4, 0.2, 0.2, 0.4)


def test_uniform_detuning_construction():
    p = ModelParams.uniform_detuning(0.4)
    assert p == ModelParams()  # the default tuning is the 0.4 uniform point
    fs = derived_frequencies(p)
    assert np.allclose(fs.omega, 0.4, atol=1e-15)
    assert fs.is_uniform()

    p4 = ModelParams.uniform_detuning(4.0, e_p=0.5)
    fs4 = derived_frequencies(p4)
    assert np.allclose(fs4.omega, 4.0, atol=1e-14)
    assert (p4.omega_c, p4.nu, p4.omega_0, p4.omega_p, p4.omega_m) == \
        (8.0, 2.0, 2.0, 4.0, 4.0)


def test_uniform_detuning_keeps_couplings():
    p = ModelParams.uniform_detuning(1.3, g2=0.7, g3=0.9, e_p=2.0, g_om=0.1)
    assert (p.g2, p.g3, p.e_p, p.g_om) == (0.7, 0.9, 2.0, 0.1)


def test_derived_frequency_values():
    p = ModelParams(omega_c=2.1, omega_m=0.9, nu=0.3, omega_0=0.5, omega_p=1.4)
    fs = derived_frequencies(p)
    assert np.allclose(fs.omega, [0.9, 1.3, 1.3, 0.7], atol=1e-15)
    assert not fs.is_uniform()


def test_pair_frequencies_are_harmonic_means():
    rng = np.random.default_rng(17)
    for _ in range(20):
        p = ModelParams(omega_c=rng.uniform(1.5, 4.0), omega_m=rng.uniform(0.2, 2.0),
                        nu=rng.uniform(0.05, 0.4), omega_0=rng.uniform(0.05, 0.4),
                        omega_p=rng.uniform(0.0, 0.7))
        fs = derived_frequencies(p)
        for i in range(4):
            for j in range(4):
                hm = 2.0 / (1.0 / fs.omega[i] + 1.0 / fs.omega[j])
                assert abs(fs.pair[i, j] - hm) < 1e-14
        assert np.allclose(fs.pair, fs.pair.T, atol=1e-15)
        assert np.allclose(np.diag(fs.pair), fs.omega, atol=1e-14)


def test_nonpositive_detunings_are_named():
    with pytest.raises(NonpositiveDetuningError, match="omega_1"):
        derived_frequencies(ModelParams(omega_m=0.0))
    with pytest.raises(NonpositiveDetuningError, match="omega_2"):
        derived_frequencies(ModelParams(omega_c=0.3, nu=0.2, omega_0=0.2))
    with pytest.raises(NonpositiveDetuningError, match="omega_3"):
        derived_frequencies(ModelParams(omega_c=0.3, nu=0.2, omega_0=0.2))
    with pytest.raises(NonpositiveDetuningError, match="omega_4"):
        derived_frequencies(ModelParams(omega_p=0.8))


def test_parameter_validation():
    with pytest.raises(ValueError, match="g2"):
        ModelParams(g2=-1.0)
    with pytest.raises(ValueError, match="omega_c"):
        ModelParams(omega_c=float("nan"))
    with pytest.raises(ValueError, match="e_p"):
        ModelParams(e_p=float("inf"))


def test_scaled_couplings():
    p = ModelParams.uniform_detuning(2.0, g2=1.0, g3=0.8, e_p=0.5, g_om=1.2)
    h = p.with_scaled_couplings(0.5)
    assert (h.g2, h.g3, h.e_p, h.g_om) == (0.5, 0.4, 0.25, 0.6)
    # frequencies untouched
    assert (h.omega_c, h.omega_m, h.nu, h.omega_0, h.omega_p) == \
        (p.omega_c, p.omega_m, p.nu, p.omega_0, p.omega_p)


def test_is_uniform_tolerance():
    base = np.array([1.0, 1.0, 1.0, 1.0])
    pair = np.ones((4, 4))
    assert FrequencySet(omega=base, pair=pair).is_uniform()
    nudged = base + np.array([0.0, 0.0, 0.0, 0.5 * UNIFORM_TOL])
    assert FrequencySet(omega=nudged, pair=pair).is_uniform()
    spread = base + np.array([0.0, 0.0, 0.0, 1e-6])
    assert not FrequencySet(omega=spread, pair=pair).is_uniform()
