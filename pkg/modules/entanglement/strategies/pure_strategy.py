import numpy as np

from modules.entanglement.concurrence import concurrence_pure, rho_spectrum
from modules.entanglement.strategies.concurrence_strategy import ConcurrenceStrategy
from modules.errors import InvalidInputError


class PureConcurrenceStrategy(ConcurrenceStrategy):
    """Exact concurrence; only defined for rank-one states."""

    name = "pure"

    def concurrence(self, rho):
        spectrum = rho_spectrum(rho)
        if spectrum.rank != 1:
            raise InvalidInputError(f"pure concurrence needs a rank-one state, got rank {spectrum.rank}")
        return concurrence_pure(np.asarray(spectrum.vectors[0]))
