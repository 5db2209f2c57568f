import logging
from dataclasses import dataclass

import numpy as np

from modules.cavity_model import (
    ALPHA_W,
    Family,
    InitialStateSpec,
    build_hamiltonian,
    build_initial_state,
    homogeneous_params,
)
from modules.dynamics import QubitDensity, diagonalize, evolve_many, traced_purities, traced_states
from modules.entanglement.entanglement_context import EntanglementContext
from modules.entanglement.strategies.quasipure_strategy import QuasiPureStrategy
from modules.errors import InvalidParameterError

logger = logging.getLogger(__name__)

PURITY = "purity"
CONCURRENCE = "concurrence"


@dataclass(frozen=True)
class TrajectoryPoint:
    t: float
    purity: float
    concurrence: float


def time_grid(t_max, steps):
    if steps < 2:
        raise InvalidParameterError(f"a time grid needs at least 2 steps, got {steps}")
    if not t_max > 0:
        raise InvalidParameterError(f"t_max must be positive, got {t_max}")
    return np.linspace(0.0, t_max, int(steps))


def trajectory_layers(params, spec: InitialStateSpec, times, layers=(PURITY, CONCURRENCE), context=None):
    """Purity and concurrence of the traced qubit state along ``times``.

    Returns a dict keyed by the requested layer names.
    """
    propagator = diagonalize(build_hamiltonian(params, spec.n))
    amplitudes = evolve_many(propagator, build_initial_state(spec), times)

    out = {}
    if PURITY in layers:
        out[PURITY] = traced_purities(amplitudes, spec.n)
    if CONCURRENCE in layers:
        context = context or EntanglementContext(QuasiPureStrategy())
        out[CONCURRENCE] = np.array(
            [context.concurrence(QubitDensity(rho)) for rho in traced_states(amplitudes, spec.n)]
        )
    return out


def cp_trajectory(params, spec, t_max, steps, context=None):
    times = time_grid(t_max, steps)
    layers = trajectory_layers(params, spec, times, context=context)
    logger.debug("trajectory of %d points for %s", len(times), spec)
    return [
        TrajectoryPoint(float(t), float(p), float(c))
        for t, p, c in zip(times, layers[PURITY], layers[CONCURRENCE])
    ]


def red_curve(n, t_max, steps, context=None):
    """Non-interacting atoms started in the W state."""
    spec = InitialStateSpec(Family.PSI, ALPHA_W, n)
    return cp_trajectory(homogeneous_params(0.0, 0.0), spec, t_max, steps, context=context)
