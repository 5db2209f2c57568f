import logging
from dataclasses import dataclass

import numpy as np

from modules.errors import InvalidInputError

logger = logging.getLogger(__name__)

ENVELOPE_BINS = 200
COVERAGE_ATOL = 1e-12


@dataclass(frozen=True)
class EnvelopeReport:
    max_excess: float
    uncovered: int


def _envelope(purities, concurrences, bins, upper):
    low, high = purities.min(), purities.max()
    width = (high - low) / bins if high > low else 1.0

    def bin_of(p):
        return np.clip(((p - low) / width).astype(int), 0, bins - 1)

    pick = np.fmax if upper else np.fmin
    values = np.full(bins, np.nan)
    for i, c in zip(bin_of(purities), concurrences):
        values[i] = pick(values[i], c)

    # consecutive reference samples are joined by straight segments, so every
    # bin a segment crosses sees the curve even when no sample lands in it
    for p0, c0, p1, c1 in zip(purities[:-1], concurrences[:-1], purities[1:], concurrences[1:]):
        if p0 == p1:
            continue
        first, last = bin_of(np.array([min(p0, p1), max(p0, p1)]))
        edges = low + np.arange(first, last + 2) * width
        left = np.clip(edges[:-1], min(p0, p1), max(p0, p1))
        right = np.clip(edges[1:], min(p0, p1), max(p0, p1))
        slope = (c1 - c0) / (p1 - p0)
        ends = pick(c0 + (left - p0) * slope, c0 + (right - p0) * slope)
        values[first:last + 1] = pick(values[first:last + 1], ends)

    centres = low + (np.arange(bins) + 0.5) * width
    occupied = ~np.isnan(values)

    def at(p):
        i = min(max(int((p - low) / width), 0), bins - 1)
        interpolated = np.interp(p, centres[occupied], values[occupied])
        if not occupied[i]:
            return interpolated
        return max(values[i], interpolated) if upper else min(values[i], interpolated)

    return low, high, at


def envelope_check(trajectory, reference, mode="upper", bins=ENVELOPE_BINS):
    """Largest amount by which ``trajectory`` crosses the envelope of ``reference``.

    In ``upper`` mode the reference's per-purity maximum should bound the
    trajectory from above; in ``lower`` mode its minimum should bound it from
    below. Non-positive ``max_excess`` confirms the bound. Trajectory points
    outside the reference purity range are counted in ``uncovered`` and left
    out of the maximum.
    """
    if not trajectory or not reference:
        raise InvalidInputError("envelope check needs two nonempty trajectories")
    if mode not in ("upper", "lower"):
        raise InvalidInputError(f"unknown envelope mode {mode!r}")
    upper = mode == "upper"

    low, high, at = _envelope(
        np.array([point.purity for point in reference]),
        np.array([point.concurrence for point in reference]),
        bins,
        upper,
    )

    excesses, uncovered = [], 0
    for point in trajectory:
        if not low - COVERAGE_ATOL <= point.purity <= high + COVERAGE_ATOL:
            uncovered += 1
            continue
        bound = at(point.purity)
        excesses.append(point.concurrence - bound if upper else bound - point.concurrence)

    if uncovered:
        logger.warning("%d trajectory points fall outside the reference purity range", uncovered)
    max_excess = max(excesses) if excesses else float("-inf")
    return EnvelopeReport(max_excess=float(max_excess), uncovered=uncovered)
