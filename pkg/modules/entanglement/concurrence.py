import logging
import math
from dataclasses import dataclass

import numpy as np

from modules.dynamics.qubit_density import QubitDensity
from modules.entanglement.subsets import (
    check_subset,
    concurrence_operator_rows,
    linear_entropy_sum,
    qubit_count,
    reduced_purity,
)
from modules.errors import InvalidInputError

logger = logging.getLogger(__name__)

NORM_ATOL = 1e-10
RANK_TOL = 1e-12
NEGATIVE_EIGENVALUE_TOL = 1e-9
ZERO_WEIGHT_TOL = 1e-14


@dataclass(frozen=True)
class PureQubitState:
    """Normalized multi-qubit state in standard binary order (qubit 1 most significant)."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        qubit_count(amplitudes)
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_ATOL:
            raise InvalidInputError(f"pure state is not normalized (norm={norm:.15g})")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def n_qubits(self):
        return qubit_count(self.amplitudes)


@dataclass(frozen=True)
class RhoSpectrum:
    """Retained eigenpairs of a density matrix, weights descending."""

    weights: np.ndarray
    vectors: np.ndarray

    @property
    def rank(self):
        return len(self.weights)

    @property
    def subnormalized(self):
        """Rows ``sqrt(mu_i) |phi_i>``."""
        return np.sqrt(self.weights)[:, None] * self.vectors


def _as_state(state):
    return state if isinstance(state, PureQubitState) else PureQubitState(state)


def _density_matrix(rho):
    if isinstance(rho, QubitDensity):
        return rho.computational()
    matrix = np.asarray(rho, dtype=np.complex128)
    return QubitDensity.from_computational(matrix).computational()


def subset_purity(state, subset):
    state = _as_state(state)
    axes = check_subset(subset, state.n_qubits)
    return reduced_purity(state.amplitudes, axes, state.n_qubits)


def _pure_value(amplitudes, n_qubits):
    """Concurrence of a normalized state, no validation."""
    deficit = linear_entropy_sum(amplitudes, n_qubits)
    return 2.0 ** (1.0 - n_qubits / 2.0) * math.sqrt(deficit)


def concurrence_pure(state):
    state = _as_state(state)
    return _pure_value(state.amplitudes, state.n_qubits)


def concurrence_family_phi(alpha):
    return math.sin(2.0 * alpha)


def concurrence_family_psi(alpha):
    return math.sin(alpha) / math.sqrt(2.0) * math.sqrt(5.0 + 3.0 * math.cos(2.0 * alpha))


def rho_spectrum(rho):
    matrix = _density_matrix(rho)
    weights, vectors = np.linalg.eigh((matrix + matrix.conj().T) / 2.0)
    if weights.min() < -NEGATIVE_EIGENVALUE_TOL:
        raise InvalidInputError(f"density matrix has negative eigenvalue {weights.min():.3e}")
    weights = np.clip(weights, 0.0, None)
    # stable sort keeps the first index ahead on ties
    order = np.argsort(-weights, kind="stable")
    keep = [i for i in order if weights[i] > RANK_TOL]
    weights = weights[keep] / weights[keep].sum()
    return RhoSpectrum(weights=weights, vectors=vectors[:, keep].T)


def concurrence_quasipure(rho):
    """Quasi-pure lower bound on the convex-roof concurrence.

    With ``chi_i = sqrt(mu_i) phi_i`` from the spectral decomposition, the bound
    uses the complex symmetric matrix
    ``tau_jk = <chi_1 chi_1|A|chi_j chi_k> / sqrt(<chi_1 chi_1|A|chi_1 chi_1>)``
    and returns ``max(0, s_1 - sum_{i>1} s_i)`` over its singular values.
    Pure states give back their concurrence exactly.
    """
    spectrum = rho_spectrum(rho)
    chi = spectrum.subnormalized
    n_qubits = qubit_count(chi)
    tau = concurrence_operator_rows(chi[0], chi, n_qubits)

    leading = tau[0, 0].real
    if leading <= ZERO_WEIGHT_TOL:
        logger.debug("dominant eigenvector is separable, quasi-pure bound is 0")
        return 0.0
    tau = tau / math.sqrt(leading)

    singular = np.linalg.svd(tau, compute_uv=False)
    return float(max(0.0, singular[0] - singular[1:].sum()))


def decomposition_average(vectors):
    """``sum_k p_k C(psi_k)`` for unnormalized ensemble members ``sqrt(p_k) psi_k``."""
    vectors = np.asarray(vectors, dtype=np.complex128)
    n_qubits = qubit_count(vectors)
    total = 0.0
    for vector in vectors:
        weight = np.vdot(vector, vector).real
        if weight > ZERO_WEIGHT_TOL:
            total += weight * _pure_value(vector / math.sqrt(weight), n_qubits)
    return total
