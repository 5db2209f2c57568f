from dataclasses import dataclass

from modules.errors import InvalidParameterError

N_QUBITS = 3

# Qubit strings in sector order; also the row order of the traced qubit state.
QUBIT_ORDER = ("000", "001", "010", "100", "110", "101", "011", "111")


def popcount(bits):
    return bits.count("1")


@dataclass(frozen=True)
class ExcitationSector:
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise InvalidParameterError(f"excitation count must be a nonnegative integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def dimension(self):
        return (1, 4, 7)[self.n] if self.n < 3 else 8


@dataclass(frozen=True)
class SectorBasis:
    """Ordered ``(photon_number, qubit_bits)`` states with a fixed excitation count."""

    sector: ExcitationSector
    states: tuple

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    @property
    def n(self):
        return self.sector.n

    def index(self, photons, bits):
        return self.states.index((photons, bits))

    def qubit_positions(self):
        """Position of each basis state's qubit string in ``QUBIT_ORDER``."""
        return [QUBIT_ORDER.index(bits) for _, bits in self.states]


def build_sector_basis(n):
    sector = ExcitationSector(n)
    states = tuple(
        (sector.n - popcount(bits), bits)
        for bits in QUBIT_ORDER
        if sector.n - popcount(bits) >= 0
    )
    return SectorBasis(sector=sector, states=states)
