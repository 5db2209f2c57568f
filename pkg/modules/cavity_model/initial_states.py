import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from modules.cavity_model.sector_basis import build_sector_basis
from modules.errors import InvalidInputError, InvalidParameterError

NORM_ATOL = 1e-10

# Angle at which the psi family is the W state.
ALPHA_W = math.atan(math.sqrt(2.0))


class Family(str, Enum):
    PHI = "phi"
    PSI = "psi"


@dataclass(frozen=True)
class InitialStateSpec:
    family: Family
    alpha: float
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not math.isfinite(self.alpha):
            raise InvalidParameterError(f"alpha must be finite, got {self.alpha}")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameterError(
                f"initial states need at least one excitation, got n={self.n}"
            )
        object.__setattr__(self, "n", int(self.n))


@dataclass(frozen=True)
class SectorVector:
    amplitudes: np.ndarray
    n: int

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128)
        if amplitudes.shape != (len(build_sector_basis(self.n)),):
            raise InvalidInputError(
                f"sector {self.n} needs {len(build_sector_basis(self.n))} amplitudes, got shape {amplitudes.shape}"
            )
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_ATOL:
            raise InvalidInputError(f"state vector is not normalized (norm={norm:.15g})")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)


def build_initial_state(spec: InitialStateSpec):
    """Product state ``|n-1> (x) |qubits>`` from the phi or psi family."""
    basis = build_sector_basis(spec.n)
    photons = spec.n - 1
    amplitudes = np.zeros(len(basis), dtype=np.complex128)
    sin_a, cos_a = math.sin(spec.alpha), math.cos(spec.alpha)

    if spec.family is Family.PHI:
        amplitudes[basis.index(photons, "001")] = sin_a
        amplitudes[basis.index(photons, "010")] = cos_a
    else:
        amplitudes[basis.index(photons, "001")] = sin_a / math.sqrt(2.0)
        amplitudes[basis.index(photons, "010")] = cos_a
        amplitudes[basis.index(photons, "100")] = sin_a / math.sqrt(2.0)

    return SectorVector(amplitudes, spec.n)
