import logging
from dataclasses import dataclass

import numpy as np

from modules.cavity_model.initial_states import SectorVector
from modules.cavity_model.sector_basis import QUBIT_ORDER, build_sector_basis, popcount
from modules.errors import InvalidInputError

logger = logging.getLogger(__name__)

DENSITY_ATOL = 1e-10
EIGENVALUE_FLOOR = -1e-9

# QUBIT_ORDER position -> standard binary index (qubit 1 most significant)
_TO_COMPUTATIONAL = np.array([int(bits, 2) for bits in QUBIT_ORDER])
_POPCOUNT = np.array([popcount(bits) for bits in QUBIT_ORDER])
# entries the oscillator trace of a single-sector state can populate
BLOCK_MASK = _POPCOUNT[:, None] == _POPCOUNT[None, :]


@dataclass(frozen=True)
class QubitDensity:
    """Three-qubit density matrix, rows ordered 000,001,010,100,110,101,011,111."""

    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.shape != (8, 8):
            raise InvalidInputError(f"qubit density must be 8x8, got {matrix.shape}")
        if not np.allclose(matrix, matrix.conj().T, rtol=0.0, atol=DENSITY_ATOL):
            raise InvalidInputError("qubit density is not Hermitian")
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > DENSITY_ATOL:
            raise InvalidInputError(f"qubit density has trace {trace:.15g}")
        lowest = np.linalg.eigvalsh(matrix).min()
        if lowest < EIGENVALUE_FLOOR:
            raise InvalidInputError(f"qubit density has negative eigenvalue {lowest:.3e}")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    def computational(self):
        """The same state in standard binary order."""
        out = np.zeros((8, 8), dtype=np.complex128)
        out[np.ix_(_TO_COMPUTATIONAL, _TO_COMPUTATIONAL)] = self.matrix
        return out

    @classmethod
    def from_computational(cls, matrix):
        matrix = np.asarray(matrix, dtype=np.complex128)
        return cls(matrix[np.ix_(_TO_COMPUTATIONAL, _TO_COMPUTATIONAL)])

    @classmethod
    def from_pure(cls, amplitudes):
        """Projector onto a state given in standard binary order."""
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        return cls.from_computational(np.outer(amplitudes, amplitudes.conj()))


def _qubit_amplitudes(amplitudes, n):
    """Spread sector amplitudes onto the 8 qubit strings (last axis)."""
    basis = build_sector_basis(n)
    qubit = np.zeros(amplitudes.shape[:-1] + (8,), dtype=np.complex128)
    qubit[..., basis.qubit_positions()] = amplitudes
    return qubit


def partial_trace_oscillator(state, n=None):
    """Trace the oscillator out of a single-sector state.

    ``state`` is a :class:`SectorVector` or a sector density matrix together with
    its excitation count ``n``. Inside a sector each qubit string carries a fixed
    photon number, so coherences survive only between strings of equal popcount.
    """
    if isinstance(state, SectorVector):
        qubit = _qubit_amplitudes(state.amplitudes, state.n)
        rho = np.outer(qubit, qubit.conj())
    else:
        if n is None:
            raise InvalidInputError("a sector density matrix needs its excitation count")
        basis = build_sector_basis(n)
        sector_rho = np.asarray(state, dtype=np.complex128)
        if sector_rho.shape != (len(basis), len(basis)):
            raise InvalidInputError(
                f"sector {n} density must be {len(basis)}x{len(basis)}, got {sector_rho.shape}"
            )
        positions = basis.qubit_positions()
        rho = np.zeros((8, 8), dtype=np.complex128)
        rho[np.ix_(positions, positions)] = sector_rho

    rho = np.where(BLOCK_MASK, rho, 0.0)
    return QubitDensity((rho + rho.conj().T) / 2.0)


def traced_states(amplitudes, n):
    """Traced qubit matrices for a stack of sector amplitude rows, shape (T, 8, 8)."""
    qubit = _qubit_amplitudes(np.asarray(amplitudes, dtype=np.complex128), n)
    rho = qubit[:, :, None] * qubit[:, None, :].conj()
    return np.where(BLOCK_MASK, rho, 0.0)


def traced_purities(amplitudes, n):
    """Purity of the traced state for each row, without forming the matrices.

    The traced state is block diagonal with rank-one blocks, so its purity is
    the sum of squared block weights.
    """
    weights = np.abs(_qubit_amplitudes(np.asarray(amplitudes, dtype=np.complex128), n)) ** 2
    blocks = np.stack([weights[:, _POPCOUNT == k].sum(axis=1) for k in range(4)], axis=1)
    return (blocks ** 2).sum(axis=1)


def purity(rho: QubitDensity):
    matrix = rho.matrix if isinstance(rho, QubitDensity) else np.asarray(rho)
    return float(np.real(np.vdot(matrix, matrix)))
