"""Reduced dynamics of the measured ion pair inside one cavity.

After restricting the effective Hamiltonian to optical/mechanical vacuum (see
:mod:`ionrepeater.effham` for the derivation check), the four amplitude
families obey a linear Schrodinger system

    i dX/dt = S(t) X(t),

with X the 4x4 family matrix of :class:`~ionrepeater.ionstate.AmplitudeFamilies`
and S(t) a Hermitian 4x4 generator whose off-diagonal phases rotate at the
differences of the derived detunings.  When all four detunings coincide (the
default tuning), S is constant and the propagator is a plain matrix
exponential; otherwise a dependency-free adaptive RK4 integrates the system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import IntegratorError, TimeDependenceError
from .ionstate import AmplitudeFamilies
from .params import UNIFORM_TOL, FrequencySet, ModelParams, derived_frequencies

#: Maximum allowed |total_norm_sq - 1| at any trajectory sample.
NORM_DRIFT_TOL = 1e-8

#: Local (per macro step) error tolerance of the Richardson step control.
LOCAL_TOL = 1e-10


class _Generator:
    """Callable S(t) with the time-independent magnitudes precomputed."""

    def __init__(self, p: ModelParams, freqs: FrequencySet | None = None):
        fs = derived_frequencies(p) if freqs is None else freqs
        w = fs.omega
        wp = fs.pair
        self.exchange = p.g2 * p.g3 / wp[1, 2]
        self.pump2 = p.g2 * p.e_p / wp[1, 3]
        self.pump3 = p.g3 * p.e_p / wp[2, 3]
        self.diag = np.array([
            -p.g3 ** 2 / wp[2, 2],
            -p.g2 ** 2 / wp[1, 1],
            -(p.g2 ** 2 / wp[1, 1] + p.g3 ** 2 / wp[2, 2]),
            0.0,
        ])
        # phase rates of the three distinct oscillating entries
        self.rate_23 = w[1] - w[2]
        self.rate_42 = w[3] - w[1]
        self.rate_43 = w[3] - w[2]
        self.is_constant = fs.is_uniform()

    def __call__(self, t: float) -> np.ndarray:
        ex = self.exchange * np.exp(1j * self.rate_23 * t)
        e42 = np.exp(1j * self.rate_42 * t)
        e43 = np.exp(1j * self.rate_43 * t)
        p2, p3 = self.pump2, self.pump3
        s = np.array([
            [self.diag[0], -ex, p2 * np.conj(e42), p3 * e43],
            [-np.conj(ex), self.diag[1], p3 * np.conj(e43), p2 * e42],
            [p2 * e42, p3 * e43, self.diag[2], 0.0],
            [p3 * np.conj(e43), p2 * np.conj(e42), 0.0, self.diag[3]],
        ], dtype=complex)
        return s

    def magnitude(self) -> float:
        """Frobenius norm of S, constant in time since phases are unimodular."""
        off = 2 * self.exchange ** 2 + 4 * self.pump2 ** 2 + 4 * self.pump3 ** 2
        return float(np.sqrt(np.sum(self.diag ** 2) + off))

    def max_phase_rate(self) -> float:
        return float(max(abs(self.rate_23), abs(self.rate_42), abs(self.rate_43)))


def s_matrix(p: ModelParams, t: float) -> np.ndarray:
    """Hermitian 4x4 generator of the family system at time ``t``.

    Diagonal: (-g3^2/w33, -g2^2/w22, -(g2^2/w22 + g3^2/w33), 0).  Rows 1,2 are
    coupled by the exchange term -(g2*g3/w23) e^{+/- i(w2-w3)t}; rows 1,2
    couple to rows 3,4 through the pump amplitudes g2*E_P/w24 and g3*E_P/w34
    with phases e^{+/- i(w4-w2)t} and e^{+/- i(w4-w3)t}.
    """
    return _Generator(p)(t)


def propagator_const(p: ModelParams, t: float) -> np.ndarray:
    """exp(-i S t) for the constant-generator regime.

    Valid only when the four derived detunings agree within ``UNIFORM_TOL``;
    computed by eigendecomposition of the Hermitian S, so the result is
    unitary to machine precision.

    Raises
    ------
    TimeDependenceError
        If the detunings differ, i.e. S is genuinely time dependent.
    """
    fs = derived_frequencies(p)
    if not fs.is_uniform():
        raise TimeDependenceError(
            f"generator is time dependent (detunings {fs.omega}); "
            f"constant propagator undefined"
        )
    lam, v = np.linalg.eigh(s_matrix(p, 0.0))
    return (v * np.exp(-1j * lam * t)) @ v.conj().T


@dataclass(frozen=True)
class Trajectory:
    """Family matrices sampled on a strictly increasing time grid."""

    t_grid: np.ndarray
    families: tuple[AmplitudeFamilies, ...]
    method: str

    def __len__(self) -> int:
        return len(self.t_grid)


def _rk4_step(f: Callable, t: float, x: np.ndarray, h: float) -> np.ndarray:
    k1 = f(t, x)
    k2 = f(t + 0.5 * h, x + 0.5 * h * k1)
    k3 = f(t + 0.5 * h, x + 0.5 * h * k2)
    k4 = f(t + h, x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _fixed_steps(f: Callable, t0: float, t1: float, x: np.ndarray,
                 n: int) -> np.ndarray:
    """n equal RK4 steps from t0 to t1 with no error control (order checks)."""
    h = (t1 - t0) / n
    for k in range(n):
        x = _rk4_step(f, t0 + k * h, x, h)
    return x


def _advance(f: Callable, t0: float, t1: float, x: np.ndarray,
             h0: float) -> np.ndarray:
    """Adaptive RK4 from t0 to t1: each trial step is Richardson-checked
    against two half steps and halved until the difference is below
    ``LOCAL_TOL``."""
    h_min = h0 * 2.0 ** -30
    t = t0
    while t < t1 - 1e-14 * max(1.0, abs(t1)):
        h = min(h0, t1 - t)
        while True:
            full = _rk4_step(f, t, x, h)
            half = _rk4_step(f, t, x, 0.5 * h)
            two_half = _rk4_step(f, t + 0.5 * h, half, 0.5 * h)
            err = float(np.max(np.abs(two_half - full)))
            if err <= LOCAL_TOL:
                break
            if h <= h_min:
                raise IntegratorError(
                    f"step control exhausted at t={t:.6g} (h={h:.3e}, err={err:.3e})"
                )
            h *= 0.5
        x = two_half
        t += h
    return x


def _validate_grid(t_grid: np.ndarray) -> np.ndarray:
    tg = np.asarray(t_grid, dtype=float)
    if tg.ndim != 1 or tg.size < 1:
        raise ValueError("t_grid must be a nonempty 1-d sequence")
    if abs(tg[0]) > 1e-12:
        raise ValueError(f"t_grid must start at 0, got {tg[0]!r}")
    if tg.size > 1 and np.any(np.diff(tg) <= 0):
        raise ValueError("t_grid must be strictly increasing")
    return tg


def evolve(p: ModelParams, x0: AmplitudeFamilies, t_grid: Sequence[float],
           method: str = "auto") -> Trajectory:
    """Evolve all four family columns under the common generator S(t).

    Parameters
    ----------
    p : ModelParams
    x0 : AmplitudeFamilies
        Initial families; total squared norm must be 1 (within 1e-9).
    t_grid : sequence of float
        Strictly increasing sample times starting at 0 (units of 1/g).
    method : {'auto', 'expm', 'ode'}
        'expm' uses the constant-generator matrix exponential (requires equal
        detunings); 'ode' forces the adaptive RK4; 'auto' picks 'expm' when S
        is constant and 'ode' otherwise.

    Returns
    -------
    Trajectory
        Norm drift at every sample is checked against ``NORM_DRIFT_TOL``.

    Raises
    ------
    IntegratorError
        If step control fails or conservation is violated.
    """
    tg = _validate_grid(t_grid)
    if abs(x0.total_norm_sq() - 1.0) > 1e-9:
        raise ValueError(
            f"x0 must have total squared norm 1, got {x0.total_norm_sq()!r}"
        )
    gen = _Generator(p)
    if method == "auto":
        method = "expm" if gen.is_constant else "ode"
    if method == "expm":
        if not gen.is_constant:
            raise TimeDependenceError(
                "expm path requires equal detunings; use method='ode'"
            )
        lam, v = np.linalg.eigh(gen(0.0))
        w = v.conj().T @ x0.matrix
        mats = [(v * np.exp(-1j * lam * t)) @ w for t in tg]
    elif method == "ode":
        rhs = lambda t, x: -1j * (gen(t) @ x)  # noqa: E731
        h0 = 0.01 / max(gen.magnitude(), gen.max_phase_rate(), 1e-6)
        mats = [x0.matrix.copy()]
        x = x0.matrix.copy()
        for k in range(1, tg.size):
            x = _advance(rhs, tg[k - 1], tg[k], x, h0)
            mats.append(x.copy())
        if tg.size == 1:
            mats = mats[:1]
    else:
        raise ValueError(f"unknown method {method!r}")

    families = []
    for t, m in zip(tg, mats):
        fam = AmplitudeFamilies(m)
        drift = abs(fam.total_norm_sq() - 1.0)
        if drift > NORM_DRIFT_TOL:
            raise IntegratorError(
                f"norm drift {drift:.3e} at t={t:.6g} exceeds {NORM_DRIFT_TOL}"
            )
        families.append(fam)
    return Trajectory(t_grid=tg, families=tuple(families), method=method)
