import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from modules.cavity_model import PairSumConvention, homogeneous_params, quasi_homogeneous_params
from modules.errors import InvalidInputError, InvalidParameterError, NoFeatureError
from modules.scan.trajectory import CONCURRENCE, PURITY, time_grid, trajectory_layers
from modules.scan.worker_pool import WorkerPool

logger = logging.getLogger(__name__)

FLAT_PURITY_ATOL = 1e-12


class HamiltonianModel(str, Enum):
    HOMOGENEOUS = "homogeneous"
    QUASI_HOMOGENEOUS = "quasi_homogeneous"

    def params(self, kappa, ising, convention=PairSumConvention.ORDERED):
        if self is HamiltonianModel.HOMOGENEOUS:
            return homogeneous_params(kappa, ising, convention)
        return quasi_homogeneous_params(kappa, ising, convention)


@dataclass(frozen=True)
class ScanGrid:
    """Layers indexed ``[j, t]``; ``concurrence`` is None when not requested."""

    j_values: np.ndarray
    t_values: np.ndarray
    purity: np.ndarray
    concurrence: np.ndarray = None

    def __post_init__(self):
        shape = (len(self.j_values), len(self.t_values))
        for name in (PURITY, CONCURRENCE):
            layer = getattr(self, name)
            if layer is not None and np.shape(layer) != shape:
                raise InvalidInputError(f"{name} layer has shape {np.shape(layer)}, expected {shape}")


def density_scan(kappa, model, j_range, t_range, spec, layers=(PURITY,),
                 convention=PairSumConvention.ORDERED, pool=None, context=None):
    """Purity (and optionally concurrence) over a grid of Ising couplings and times.

    ``j_range`` is ``(min, max, steps)`` and ``t_range`` is ``(max, steps)``.
    Columns of fixed J are independent and may run on the worker pool.
    """
    j_min, j_max, j_steps = j_range
    t_max, t_steps = t_range
    if j_steps < 2 or not j_max > j_min:
        raise InvalidParameterError(f"invalid J range {j_range}")
    if not all(math.isfinite(v) for v in (kappa, j_min, j_max)):
        raise InvalidParameterError("scan bounds must be finite")
    layers = tuple(layer for layer in (PURITY, CONCURRENCE) if layer in set(layers) | {PURITY})

    model = HamiltonianModel(model)
    j_values = np.linspace(j_min, j_max, int(j_steps))
    t_values = time_grid(t_max, t_steps)

    def column(ising):
        return trajectory_layers(model.params(kappa, ising, convention), spec, t_values, layers, context)

    pool = pool or WorkerPool()
    columns = pool.map(column, j_values)
    logger.info("scanned %d J values x %d times (kappa=%g, %s)", len(j_values), len(t_values), kappa, model.value)

    return ScanGrid(
        j_values=j_values,
        t_values=t_values,
        purity=np.stack([c[PURITY] for c in columns]),
        concurrence=np.stack([c[CONCURRENCE] for c in columns]) if CONCURRENCE in layers else None,
    )


def _critical_statistic(grid):
    if np.ptp(grid.purity) < FLAT_PURITY_ATOL:
        raise NoFeatureError("purity is constant over the whole grid")
    variance = grid.purity.var(axis=1)
    top = max(1, math.ceil(0.1 * len(grid.j_values)))
    baseline = variance[-top:].mean()
    return variance - baseline


def critical_j(grid: ScanGrid):
    """J at which the time-variance of purity rises furthest above its large-J plateau."""
    statistic = _critical_statistic(grid)
    return float(grid.j_values[int(np.argmax(statistic))])


def critical_region_extent(grid: ScanGrid):
    """Width in J of the contiguous region around the peak where the statistic exceeds half its peak."""
    statistic = _critical_statistic(grid)
    peak_index = int(np.argmax(statistic))
    peak = statistic[peak_index]
    if peak <= 0:
        raise NoFeatureError("no J value rises above the large-J baseline")

    above = statistic >= peak / 2.0
    lo = hi = peak_index
    while lo > 0 and above[lo - 1]:
        lo -= 1
    while hi < len(above) - 1 and above[hi + 1]:
        hi += 1
    return float(grid.j_values[hi] - grid.j_values[lo])


def concurrence_purity_correlation(grid: ScanGrid):
    if grid.concurrence is None:
        raise InvalidInputError("grid has no concurrence layer")
    return float(np.corrcoef(grid.purity.ravel(), grid.concurrence.ravel())[0, 1])
