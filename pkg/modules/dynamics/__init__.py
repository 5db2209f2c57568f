from modules.dynamics.propagator import Propagator, diagonalize, evolve, evolve_many
from modules.dynamics.qubit_density import (
    BLOCK_MASK,
    QubitDensity,
    partial_trace_oscillator,
    purity,
    traced_purities,
    traced_states,
)
