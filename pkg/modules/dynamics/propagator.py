import logging
from dataclasses import dataclass

import numpy as np

from modules.cavity_model.hamiltonian import HermitianMatrix
from modules.cavity_model.initial_states import SectorVector
from modules.errors import InvalidInputError

logger = logging.getLogger(__name__)

HERMITIAN_ATOL = 1e-10


@dataclass(frozen=True)
class Propagator:
    """Spectral data of a sector Hamiltonian, used to apply ``exp(-i t H)``."""

    n: int
    energies: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        return (self.eigenvectors * self.energies) @ self.eigenvectors.conj().T


def diagonalize(h):
    if isinstance(h, HermitianMatrix):
        matrix, sector = h.matrix, h.sector
    else:
        matrix, sector = np.asarray(h, dtype=np.complex128), None

    if not np.allclose(matrix, matrix.conj().T, rtol=0.0, atol=HERMITIAN_ATOL):
        deviation = np.abs(matrix - matrix.conj().T).max()
        raise InvalidInputError(f"matrix is not Hermitian (max deviation {deviation:.3e})")

    # eigh reads one triangle only; symmetrize so both triangles count
    energies, eigenvectors = np.linalg.eigh((matrix + matrix.conj().T) / 2.0)
    energies.setflags(write=False)
    eigenvectors.setflags(write=False)
    return Propagator(n=sector, energies=energies, eigenvectors=eigenvectors)


def _check_sector(p, v0):
    if p.n is not None and p.n != v0.n:
        raise InvalidInputError(f"state lives in sector {v0.n} but the propagator in sector {p.n}")


def evolve_many(p: Propagator, v0: SectorVector, times):
    """Amplitudes at every time in ``times``, one row per time."""
    _check_sector(p, v0)
    times = np.atleast_1d(np.asarray(times, dtype=np.float64))
    coefficients = p.eigenvectors.conj().T @ v0.amplitudes
    phases = np.exp(-1j * np.outer(times, p.energies))
    return (phases * coefficients) @ p.eigenvectors.T


def evolve(p: Propagator, v0: SectorVector, t):
    return SectorVector(evolve_many(p, v0, [t])[0], v0.n)
