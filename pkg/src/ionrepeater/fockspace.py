"""Truncated Fock-space operators for the cavity-ion model.

Mode ordering (fixed): optical x mechanical x ion2 x ion3, where each ion
carries a composite internal/vibrational space ordered internal {g, e} x
vibrational {0..d_vib-1}.  A full basis index is

    ((n_a * d_b + n_b) * (2*d_vib) + k2) * (2*d_vib) + k3

with k = internal * d_vib + vibrational for each ion.

The joint sideband operators are Sigma_- = c sigma_- and Sigma_+ = c^dag
sigma_+ (vibrational ladder times internal flip), which connect only
|g,0> <-> |e,1> on the encoded levels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ModelParams


def annihilation(d: int) -> np.ndarray:
    """Truncated bosonic annihilation operator on d levels."""
    if d < 2:
        raise ValueError(f"mode dimension must be >= 2, got {d}")
    m = np.zeros((d, d), dtype=complex)
    for n in range(1, d):
        m[n - 1, n] = np.sqrt(n)
    return m


@dataclass(frozen=True)
class FockOperator:
    """Complex square matrix on the truncated product space, with its dims.

    ``dims`` is (d_optical, d_mechanical, 2*d_vib, 2*d_vib); the matrix size
    is the product of the four entries.
    """

    dims: tuple[int, int, int, int]
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        size = int(np.prod(self.dims))
        if any(d < 2 for d in self.dims):
            raise ValueError(f"all mode dimensions must be >= 2, got {self.dims}")
        if m.shape != (size, size):
            raise ValueError(
                f"matrix shape {m.shape} does not match dims product {size}"
            )
        object.__setattr__(self, "matrix", m)


class FockSpace:
    """Operator factory for fixed truncation dimensions.

    Parameters
    ----------
    d_optical, d_mechanical : int
        Fock truncation of the two bosonic modes (>= 2).
    d_vib : int
        Per-ion vibrational truncation (>= 2).
    """

    def __init__(self, d_optical: int = 4, d_mechanical: int = 4, d_vib: int = 2):
        if min(d_optical, d_mechanical, d_vib) < 2:
            raise ValueError("all truncation dimensions must be >= 2")
        self.d_optical = d_optical
        self.d_mechanical = d_mechanical
        self.d_vib = d_vib
        self.d_ion = 2 * d_vib
        self.dims = (d_optical, d_mechanical, self.d_ion, self.d_ion)
        self.dim = d_optical * d_mechanical * self.d_ion * self.d_ion

        a1 = annihilation(d_optical)
        b1 = annihilation(d_mechanical)
        c1 = annihilation(d_vib)
        sig_minus = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)  # |g><e|
        sig_z = np.diag([-1.0, 1.0]).astype(complex)                   # g=-1, e=+1
        ion_sigma_minus = np.kron(sig_minus, c1)       # c sigma_-
        ion_sigma_z = np.kron(sig_z, np.eye(d_vib))
        ion_nvib = np.kron(np.eye(2), c1.conj().T @ c1)

        self.a = self._embed(a1, 0)
        self.b = self._embed(b1, 1)
        self.num_a = self.a.conj().T @ self.a
        self.num_b = self.b.conj().T @ self.b
        self._sigma_minus = {2: self._embed(ion_sigma_minus, 2),
                             3: self._embed(ion_sigma_minus, 3)}
        self._sigma_z = {2: self._embed(ion_sigma_z, 2),
                         3: self._embed(ion_sigma_z, 3)}
        self._nvib = {2: self._embed(ion_nvib, 2),
                      3: self._embed(ion_nvib, 3)}

    def _embed(self, op: np.ndarray, slot: int) -> np.ndarray:
        factors = [np.eye(d, dtype=complex) for d in self.dims]
        factors[slot] = op
        out = factors[0]
        for f in factors[1:]:
            out = np.kron(out, f)
        return out

    def sigma_minus(self, ion: int) -> np.ndarray:
        """Joint lowering operator c sigma_- of ion 2 or 3."""
        return self._sigma_minus[ion]

    def sigma_plus(self, ion: int) -> np.ndarray:
        return self._sigma_minus[ion].conj().T

    def sigma_z(self, ion: int) -> np.ndarray:
        """Internal-state sigma_z of ion 2 or 3 (g -> -1, e -> +1)."""
        return self._sigma_z[ion]

    def vib_number(self, ion: int) -> np.ndarray:
        return self._nvib[ion]

    def index(self, n_a: int, n_b: int, ion2: str, ion3: str) -> int:
        """Basis index of |n_a, n_b> x |ion2> x |ion3> with ion labels 'G'/'E'."""
        ks = []
        for label in (ion2, ion3):
            if label == "G":
                ks.append(0)            # internal g, vibrational 0
            elif label == "E":
                ks.append(self.d_vib + 1)  # internal e, vibrational 1
            else:
                raise ValueError(f"ion label must be 'G' or 'E', got {label!r}")
        return ((n_a * self.d_mechanical + n_b) * self.d_ion + ks[0]) \
            * self.d_ion + ks[1]

    def family_indices(self) -> list[int]:
        """Indices of vacuum x {Phi^1..Phi^4} in measured-basis row order."""
        order = [("G", "E"), ("E", "G"), ("E", "E"), ("G", "G")]
        return [self.index(0, 0, s2, s3) for s2, s3 in order]

    def encoded_projector_diagonal(self) -> np.ndarray:
        """Diagonal (0/1) of the projector keeping both ions on {|g,0>, |e,1>}."""
        keep_ion = np.zeros(self.d_ion)
        keep_ion[0] = 1.0
        keep_ion[self.d_vib + 1] = 1.0
        bos = np.ones(self.d_optical * self.d_mechanical)
        return np.kron(bos, np.kron(keep_ion, keep_ion))

    def free_energies(self, p: ModelParams) -> np.ndarray:
        """Diagonal of the free Hamiltonian H0 in the product basis."""
        return np.real(np.diag(self.free_hamiltonian(p)))

    def free_hamiltonian(self, p: ModelParams) -> np.ndarray:
        """H0: bare mode, vibrational and internal energies (diagonal)."""
        h = p.omega_c * self.num_a + p.omega_m * self.num_b
        for ion in (2, 3):
            h = h + p.nu * self.vib_number(ion) + 0.5 * p.omega_0 * self.sigma_z(ion)
        return h
