import numpy as np

from modules.cavity_model import build_sector_basis


def computational_vector(amplitudes_by_bits):
    vector = np.zeros(8, dtype=np.complex128)
    for bits, amplitude in amplitudes_by_bits.items():
        vector[int(bits, 2)] = amplitude
    return vector


def qubit_vector(sector_vector):
    """Qubit amplitudes (standard binary order) of a state with a single photon number."""
    basis = build_sector_basis(sector_vector.n)
    vector = np.zeros(8, dtype=np.complex128)
    photons = set()
    for (m, bits), amplitude in zip(basis, sector_vector.amplitudes):
        if abs(amplitude) > 0:
            photons.add(m)
            vector[int(bits, 2)] = amplitude
    assert len(photons) <= 1
    return vector


def random_params_kwargs(rng):
    return dict(
        delta=tuple(rng.uniform(-1, 1, 3)),
        g=tuple(rng.uniform(-1, 1, 3)),
        kappa=tuple(rng.uniform(-1, 1, 3)),
        ising=tuple(rng.uniform(-1, 1, 3)),
    )


def random_sector_amplitudes(rng, dimension):
    vector = rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)
    return vector / np.linalg.norm(vector)
