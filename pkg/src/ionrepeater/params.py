"""Physical parameters and the detuning frequencies derived from them.

All frequencies and couplings are dimensionless multiples of the ion-field
coupling g = g2, and times are the dimensionless gt used on every output axis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import NonpositiveDetuningError

#: Frequencies are considered equal (constant-generator regime) below this spread.
UNIFORM_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Couplings and mode frequencies of the cavity-ion model, in units of g2.

    Attributes
    ----------
    g2, g3 : float
        Ion-field couplings of the two ions inside the cavity.
    e_p : float
        Pump amplitude.
    g_om : float
        Optomechanical (photon-number to mirror) coupling.
    omega_c, omega_m : float
        Optical and mechanical mode frequencies.
    nu : float
        Ion vibrational frequency.
    omega_0 : float
        Ionic transition frequency.
    omega_p : float
        Pump frequency.
    """

    g2: float = 1.0
    g3: float = 1.0
    e_p: float = 0.5
    g_om: float = 1.0
    omega_c: float = 0.8
    omega_m: float = 0.4
    nu: float = 0.2
    omega_0: float = 0.2
    omega_p: float = 0.4

    def __post_init__(self):
        for name in ("g2", "g3", "e_p", "g_om", "omega_c", "omega_m",
                     "nu", "omega_0", "omega_p"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be a finite nonnegative real, got {v}")

    @classmethod
    def uniform_detuning(cls, omega: float, *, g2: float = 1.0, g3: float = 1.0,
                         e_p: float = 0.5, g_om: float = 1.0) -> "ModelParams":
        """Parameters with all four derived detunings equal to ``omega``.

        Uses omega_c = 2*omega, nu = omega_0 = omega/2, omega_p = omega and
        omega_m = omega, which satisfies omega_4 = omega_m and
        nu + omega_0 = omega_p with every bare frequency positive.  Any other
        assignment with the same derived detunings gives identical reduced
        dynamics.
        """
        return cls(g2=g2, g3=g3, e_p=e_p, g_om=g_om,
                   omega_c=2.0 * omega, omega_m=omega,
                   nu=0.5 * omega, omega_0=0.5 * omega, omega_p=omega)

    def with_scaled_couplings(self, factor: float) -> "ModelParams":
        """Same frequencies with g2, g3, e_p and g_om all scaled by ``factor``."""
        return replace(self, g2=factor * self.g2, g3=factor * self.g3,
                       e_p=factor * self.e_p, g_om=factor * self.g_om)


@dataclass(frozen=True)
class FrequencySet:
    """The four detuning frequencies and their pairwise harmonic means.

    ``pair[i, j]`` is the harmonic mean 2/(1/omega[i] + 1/omega[j]); the
    diagonal reproduces ``omega`` itself.
    """

    omega: np.ndarray  # shape (4,)
    pair: np.ndarray   # shape (4, 4)

    def is_uniform(self, tol: float = UNIFORM_TOL) -> bool:
        return float(np.max(self.omega) - np.min(self.omega)) <= tol


def derived_frequencies(p: ModelParams) -> FrequencySet:
    """Detunings omega_1..omega_4 of the harmonic decomposition.

    omega_1 = omega_m (optomechanical term), omega_2 = omega_3 =
    omega_c - nu - omega_0 (ion sidebands) and omega_4 = omega_c - omega_p
    (pump).  All four must be positive for the harmonic means, and hence the
    effective model, to exist.

    Raises
    ------
    NonpositiveDetuningError
        Naming every derived frequency that is not positive.
    """
    omega = np.array([
        p.omega_m,
        p.omega_c - p.nu - p.omega_0,
        p.omega_c - p.nu - p.omega_0,
        p.omega_c - p.omega_p,
    ])
    bad = [f"omega_{k + 1}={omega[k]:g}" for k in range(4) if omega[k] <= 0]
    if bad:
        raise NonpositiveDetuningError(
            "derived detunings must be positive: " + ", ".join(bad)
        )
    inv = 1.0 / omega
    pair = 2.0 / (inv[:, None] + inv[None, :])
    return FrequencySet(omega=omega, pair=pair)
