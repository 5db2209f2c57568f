import math

import numpy as np
import pytest

from helpers import computational_vector, random_params_kwargs, random_sector_amplitudes
from modules.cavity_model import (
    ALPHA_W,
    HermitianMatrix,
    InitialStateSpec,
    ModelParams,
    SectorVector,
    build_hamiltonian,
    build_initial_state,
    build_sector_basis,
    homogeneous_params,
)
from modules.dynamics import (
    BLOCK_MASK,
    QubitDensity,
    diagonalize,
    evolve,
    evolve_many,
    partial_trace_oscillator,
    purity,
    traced_purities,
    traced_states,
)
from modules.errors import InvalidInputError

SQRT3 = math.sqrt(3.0)


def w_spec(n=1):
    return InitialStateSpec("psi", ALPHA_W, n)


def random_hermitian(rng, dimension):
    a = rng.standard_normal((dimension, dimension)) + 1j * rng.standard_normal((dimension, dimension))
    return (a + a.conj().T) / 2


def test_zero_matrix_diagonalizes_to_identity():
    p = diagonalize(np.zeros((4, 4)))
    np.testing.assert_array_equal(p.energies, np.zeros(4))
    np.testing.assert_allclose(np.abs(p.eigenvectors), np.eye(4), atol=1e-12)


def test_free_one_excitation_spectrum():
    p = diagonalize(build_hamiltonian(homogeneous_params(0, 0), 1))
    np.testing.assert_allclose(p.energies, [-SQRT3, 0, 0, SQRT3], atol=1e-12)
    assert p.n == 1


def test_spectral_reconstruction(rng):
    for _ in range(50):
        dimension = int(rng.integers(1, 9))
        h = random_hermitian(rng, dimension)
        p = diagonalize(HermitianMatrix(h))
        assert np.all(np.diff(p.energies) >= 0)
        v = p.eigenvectors
        assert np.linalg.norm(v.conj().T @ v - np.eye(dimension), 2) < 1e-10
        assert np.linalg.norm(p.reconstruct() - h, 2) < 1e-10


def test_non_hermitian_input_rejected():
    with pytest.raises(InvalidInputError):
        diagonalize(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_zero_time_returns_initial_state():
    v0 = build_initial_state(InitialStateSpec("phi", 0.4, 2))
    p = diagonalize(build_hamiltonian(homogeneous_params(1.0, 0.5), 2))
    np.testing.assert_allclose(evolve(p, v0, 0.0).amplitudes, v0.amplitudes, atol=1e-14)


def test_zero_hamiltonian_leaves_state_alone():
    v0 = build_initial_state(InitialStateSpec("psi", 0.7, 1))
    p = diagonalize(build_hamiltonian(ModelParams(g=(0, 0, 0)), 1))
    np.testing.assert_allclose(evolve(p, v0, 13.0).amplitudes, v0.amplitudes, atol=1e-14)


def test_w_state_oscillates_with_vacuum_excitation():
    p = diagonalize(build_hamiltonian(homogeneous_params(0, 0), 1))
    v0 = build_initial_state(w_spec())
    basis = build_sector_basis(1)
    s = 1 / SQRT3
    for t in np.linspace(0, 5, 23):
        expected = np.zeros(4, dtype=complex)
        expected[basis.index(1, "000")] = -1j * math.sin(SQRT3 * t)
        for bits in ("001", "010", "100"):
            expected[basis.index(0, bits)] = math.cos(SQRT3 * t) * s
        np.testing.assert_allclose(evolve(p, v0, t).amplitudes, expected, atol=1e-10)


def test_evolution_rejects_sector_mismatch():
    p = diagonalize(build_hamiltonian(homogeneous_params(0, 0), 2))
    with pytest.raises(InvalidInputError):
        evolve(p, build_initial_state(w_spec(1)), 1.0)


@pytest.mark.parametrize("params", [homogeneous_params(1, 0.5), homogeneous_params(20, 3), homogeneous_params(0, 0)])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_norm_is_conserved(params, n):
    p = diagonalize(build_hamiltonian(params, n))
    v0 = build_initial_state(InitialStateSpec("phi", math.pi / 3, n))
    rows = evolve_many(p, v0, np.linspace(0, 20, 1000))
    assert np.abs(np.linalg.norm(rows, axis=1) - 1).max() < 1e-10


def test_group_law(rng):
    params = ModelParams(**random_params_kwargs(rng))
    p = diagonalize(build_hamiltonian(params, 3))
    v0 = SectorVector(random_sector_amplitudes(rng, 8), 3)
    for t1, t2 in rng.uniform(0, 10, (10, 2)):
        twice = evolve(p, evolve(p, v0, t1), t2)
        once = evolve(p, v0, t1 + t2)
        np.testing.assert_allclose(twice.amplitudes, once.amplitudes, atol=1e-9)


def rk4_step_matrix(h, step):
    a = -1j * step * h
    terms = [np.eye(len(h), dtype=complex)]
    for order in range(1, 5):
        terms.append(terms[-1] @ a / order)
    return sum(terms)


@pytest.mark.parametrize("n", [1, 2])
def test_spectral_evolution_matches_fixed_step_integrator(rng, n):
    step = 1e-3
    checkpoints = (1000, 2500, 5000)
    for _ in range(10):
        h = build_hamiltonian(ModelParams(**random_params_kwargs(rng)), n)
        p = diagonalize(h)
        v0 = SectorVector(random_sector_amplitudes(rng, len(build_sector_basis(n))), n)

        # a linear ODE makes each RK4 step a fixed matrix
        m = rk4_step_matrix(h.matrix, step)
        state = v0.amplitudes.copy()
        done = 0
        for target in checkpoints:
            state = np.linalg.matrix_power(m, target - done) @ state
            done = target
            np.testing.assert_allclose(evolve(p, v0, target * step).amplitudes, state, atol=1e-6)


def test_product_input_traces_to_pure_state():
    v0 = build_initial_state(InitialStateSpec("phi", 0.3, 4))
    rho = partial_trace_oscillator(v0)
    assert purity(rho) == pytest.approx(1.0, abs=1e-12)
    assert np.linalg.matrix_rank(rho.matrix, tol=1e-10) == 1


def test_photon_number_superposition_traces_to_mixture():
    basis = build_sector_basis(1)
    c0, c1 = 0.6, 0.8j
    amplitudes = np.zeros(4, dtype=complex)
    amplitudes[basis.index(1, "000")] = c0
    amplitudes[basis.index(0, "001")] = c1
    rho = partial_trace_oscillator(SectorVector(amplitudes, 1)).matrix

    expected = np.zeros((8, 8))
    expected[0, 0] = abs(c0) ** 2
    expected[1, 1] = abs(c1) ** 2
    np.testing.assert_allclose(rho, expected, atol=1e-15)


def test_red_curve_state_at_time_t():
    p = diagonalize(build_hamiltonian(homogeneous_params(0, 0), 1))
    v0 = build_initial_state(w_spec())
    s = 1 / SQRT3
    w = computational_vector({"001": s, "010": s, "100": s})
    vacuum = computational_vector({"000": 1.0})
    for t in (0.1, 0.5, 1.3):
        rho = partial_trace_oscillator(evolve(p, v0, t)).computational()
        expected = math.cos(SQRT3 * t) ** 2 * np.outer(w, w) + math.sin(SQRT3 * t) ** 2 * np.outer(vacuum, vacuum)
        np.testing.assert_allclose(rho, expected, atol=1e-10)


def test_sector_density_input():
    v = build_initial_state(InitialStateSpec("psi", 0.9, 2))
    sector_rho = np.outer(v.amplitudes, v.amplitudes.conj())
    np.testing.assert_allclose(
        partial_trace_oscillator(sector_rho, 2).matrix, partial_trace_oscillator(v).matrix, atol=1e-15
    )
    with pytest.raises(InvalidInputError):
        partial_trace_oscillator(sector_rho)
    with pytest.raises(InvalidInputError):
        partial_trace_oscillator(sector_rho, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_traced_state_has_block_zero_pattern(rng, n):
    dimension = len(build_sector_basis(n))
    for _ in range(25):
        rho = partial_trace_oscillator(SectorVector(random_sector_amplitudes(rng, dimension), n)).matrix
        assert np.all(rho[~BLOCK_MASK] == 0)
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_array_equal(rho, rho.conj().T)


def test_block_pattern_is_one_three_three_one():
    sizes = [int(BLOCK_MASK[i].sum()) for i in range(8)]
    assert sizes == [1, 3, 3, 3, 3, 3, 3, 1]


def test_batched_traces_match_single_traces(rng):
    n = 3
    p = diagonalize(build_hamiltonian(ModelParams(**random_params_kwargs(rng)), n))
    v0 = SectorVector(random_sector_amplitudes(rng, 8), n)
    times = np.linspace(0, 4, 7)
    rows = evolve_many(p, v0, times)
    stacked = traced_states(rows, n)
    purities = traced_purities(rows, n)
    for t, rho, value in zip(times, stacked, purities):
        single = partial_trace_oscillator(evolve(p, v0, t))
        np.testing.assert_allclose(rho, single.matrix, atol=1e-12)
        assert value == pytest.approx(purity(single), abs=1e-12)


def test_purity_examples(w_state, product_state):
    assert purity(QubitDensity.from_pure(w_state)) == pytest.approx(1.0, abs=1e-12)
    assert purity(QubitDensity(np.eye(8) / 8)) == pytest.approx(1 / 8, abs=1e-15)
    for theta in np.linspace(0, math.pi, 9):
        mixture = math.cos(theta) ** 2 * np.outer(w_state, w_state.conj()) + math.sin(theta) ** 2 * np.outer(
            product_state, product_state
        )
        expected = math.cos(theta) ** 4 + math.sin(theta) ** 4
        assert purity(QubitDensity.from_computational(mixture)) == pytest.approx(expected, abs=1e-12)


def test_qubit_density_orderings(rng):
    vector = random_sector_amplitudes(rng, 8)
    rho = QubitDensity.from_pure(vector)
    np.testing.assert_allclose(rho.computational(), np.outer(vector, vector.conj()), atol=1e-15)
    # 100 sits at computational index 4 but at position 3 in block order
    assert rho.matrix[3, 3] == pytest.approx(abs(vector[4]) ** 2)


def test_qubit_density_validation():
    with pytest.raises(InvalidInputError):
        QubitDensity(np.eye(4) / 4)
    with pytest.raises(InvalidInputError):
        QubitDensity(np.eye(8) / 4)
    negative = np.diag([1.5, -0.5, 0, 0, 0, 0, 0, 0])
    with pytest.raises(InvalidInputError):
        QubitDensity(negative)
    skew = np.eye(8, dtype=complex) / 8
    skew[0, 1] = 0.1
    with pytest.raises(InvalidInputError):
        QubitDensity(skew)
