import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from modules.cavity_model.model_params import PAIRS, ModelParams
from modules.cavity_model.sector_basis import N_QUBITS, build_sector_basis
from modules.errors import InvalidInputError, InvalidParameterError, ResourceError

logger = logging.getLogger(__name__)

HERMITIAN_ATOL = 1e-12
MAX_FULL_SPACE_LEVELS = 256


@dataclass(frozen=True)
class HermitianMatrix:
    """Hermitian operator on one excitation sector (``sector=None`` on the full space)."""

    matrix: np.ndarray
    sector: int = None

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidInputError(f"expected a square matrix, got shape {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def dimension(self):
        return self.matrix.shape[0]

    def is_hermitian(self, atol=HERMITIAN_ATOL):
        return np.allclose(self.matrix, self.matrix.conj().T, rtol=0.0, atol=atol)


def _flip(bits, position):
    return bits[:position] + ("0" if bits[position] == "1" else "1") + bits[position + 1:]


def _z(bits, position):
    return 1.0 if bits[position] == "1" else -1.0


def _apply_terms(params, photons, bits):
    """Terms of the Hamiltonian acting on ``|photons>|bits>``, as (state, amplitude) pairs."""
    multiplicity = params.pair_sum_convention.multiplicity
    diagonal = sum(params.delta[j] / 2.0 * _z(bits, j) for j in range(N_QUBITS))
    for j, k in PAIRS:
        diagonal += multiplicity * params.pair_ising(j, k) * _z(bits, j) * _z(bits, k)
    terms = [((photons, bits), diagonal)]

    for j in range(N_QUBITS):
        if bits[j] == "0" and photons > 0:
            # a s+: absorb a photon
            terms.append(((photons - 1, _flip(bits, j)), params.g[j] * math.sqrt(photons)))
        elif bits[j] == "1":
            # a^dag s-: emit a photon
            terms.append(((photons + 1, _flip(bits, j)), params.g[j] * math.sqrt(photons + 1)))

    for j, k in PAIRS:
        if bits[j] != bits[k]:
            hopped = _flip(_flip(bits, j), k)
            terms.append(((photons, hopped), 2.0 * multiplicity * params.pair_kappa(j, k)))
    return terms


def build_hamiltonian(params: ModelParams, n):
    """Sector block of the Hamiltonian, built by applying every term to the sector basis.

    No constant shift is added and the oscillator has no free term.
    """
    basis = build_sector_basis(n)
    position = {state: i for i, state in enumerate(basis)}
    matrix = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    for col, (photons, bits) in enumerate(basis):
        for state, amplitude in _apply_terms(params, photons, bits):
            matrix[position[state], col] += amplitude
    return HermitianMatrix(matrix, sector=basis.n)


_SIGMA_PLUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=np.complex128)
_SIGMA_MINUS = _SIGMA_PLUS.T.copy()
_SIGMA_Z = np.diag([-1.0, 1.0]).astype(np.complex128)
_IDENTITY_2 = np.eye(2, dtype=np.complex128)


def _qubit_operator(single, position):
    factors = [single if q == position else _IDENTITY_2 for q in range(N_QUBITS)]
    return reduce(np.kron, factors)


def _check_levels(n_max):
    if int(n_max) != n_max or n_max < 0:
        raise InvalidParameterError(f"n_max must be a nonnegative integer, got {n_max}")
    if n_max + 1 > MAX_FULL_SPACE_LEVELS:
        raise ResourceError(
            f"full space with {n_max + 1} oscillator levels exceeds the cap of {MAX_FULL_SPACE_LEVELS}"
        )
    return int(n_max)


def full_space_index(photons, bits):
    """Position of ``|photons>|bits>`` in the product basis (oscillator outermost)."""
    return photons * 2 ** N_QUBITS + int(bits, 2)


def build_full_hamiltonian(params: ModelParams, n_max):
    """Hamiltonian on the truncated product space (levels 0..n_max) x (3 qubits)."""
    n_max = _check_levels(n_max)
    levels = n_max + 1
    lower = np.diag(np.sqrt(np.arange(1, levels)), k=1).astype(np.complex128)
    eye_osc = np.eye(levels, dtype=np.complex128)
    eye_qubits = np.eye(2 ** N_QUBITS, dtype=np.complex128)
    multiplicity = params.pair_sum_convention.multiplicity

    plus = [_qubit_operator(_SIGMA_PLUS, j) for j in range(N_QUBITS)]
    minus = [_qubit_operator(_SIGMA_MINUS, j) for j in range(N_QUBITS)]
    z = [_qubit_operator(_SIGMA_Z, j) for j in range(N_QUBITS)]

    qubits_only = sum(params.delta[j] / 2.0 * z[j] for j in range(N_QUBITS))
    for j, k in PAIRS:
        exchange = minus[j] @ plus[k]
        qubits_only = qubits_only + 2.0 * multiplicity * params.pair_kappa(j, k) * (exchange + exchange.conj().T)
        qubits_only = qubits_only + multiplicity * params.pair_ising(j, k) * (z[j] @ z[k])

    cavity = sum(params.g[j] * np.kron(lower, plus[j]) for j in range(N_QUBITS))
    matrix = np.kron(eye_osc, qubits_only) + cavity + cavity.conj().T
    logger.debug("built full-space Hamiltonian of dimension %d", matrix.shape[0])
    return HermitianMatrix(matrix)


def build_number_operator(n_max):
    n_max = _check_levels(n_max)
    excitations = [
        photons + bin(index).count("1")
        for photons in range(n_max + 1)
        for index in range(2 ** N_QUBITS)
    ]
    return HermitianMatrix(np.diag(np.array(excitations, dtype=np.float64)))


def sector_embedding(n, n_max):
    """Full-space indices of the sector basis states, in sector order."""
    basis = build_sector_basis(n)
    if n > n_max:
        raise InvalidParameterError(f"sector {n} is outside the truncated space n_max={n_max}")
    return [full_space_index(photons, bits) for photons, bits in basis]


def build_rotation_operator(n):
    """Cyclic qubit shift ``|m>|i1 i2 i3> -> |m>|i3 i1 i2>`` on sector ``n``."""
    basis = build_sector_basis(n)
    matrix = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    for col, (photons, bits) in enumerate(basis):
        rotated = bits[-1] + bits[:-1]
        matrix[basis.index(photons, rotated), col] = 1.0
    return matrix


def build_symmetry_projectors(n):
    rotation = build_rotation_operator(n)
    powers = [np.linalg.matrix_power(rotation, m) for m in range(3)]
    alpha = np.exp(2j * np.pi / 3)
    return tuple(
        sum(alpha ** (-k * m) * powers[m] for m in range(3)) / 3.0
        for k in range(3)
    )
