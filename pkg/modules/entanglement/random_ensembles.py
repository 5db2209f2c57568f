import numpy as np

from modules.errors import InvalidParameterError


def _generator(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_pure_state(dims, seed=None):
    """Haar-random normalized state vector of length ``dims``."""
    if dims <= 0:
        raise InvalidParameterError(f"dims must be positive, got {dims}")
    state = _gaussian(_generator(seed), dims)
    return state / np.linalg.norm(state)


def random_unitary(dims, seed=None):
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    if dims <= 0:
        raise InvalidParameterError(f"dims must be positive, got {dims}")
    q, r = np.linalg.qr(_gaussian(_generator(seed), (dims, dims)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_local_unitary(n_qubits, seed=None):
    """Tensor product of independent Haar-random single-qubit unitaries."""
    rng = _generator(seed)
    out = np.ones((1, 1), dtype=np.complex128)
    for _ in range(n_qubits):
        out = np.kron(out, random_unitary(2, rng))
    return out


def random_density_matrix(dims, rank=None, seed=None):
    """Random mixed state ``G G^+ / tr`` with a ``dims x rank`` Ginibre matrix ``G``."""
    rank = dims if rank is None else rank
    if not 0 < rank <= dims:
        raise InvalidParameterError(f"rank must lie in 1..{dims}, got {rank}")
    ginibre = _gaussian(_generator(seed), (dims, rank))
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho).real
