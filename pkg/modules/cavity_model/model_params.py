import math
from dataclasses import dataclass, replace
from enum import Enum

from modules.errors import InvalidParameterError

# Unordered qubit pairs, in the storage order of kappa and ising.
PAIRS = ((0, 1), (0, 2), (1, 2))


class PairSumConvention(str, Enum):
    ORDERED = "ordered"
    UNORDERED = "unordered"

    @property
    def multiplicity(self):
        return 2 if self is PairSumConvention.ORDERED else 1


class Layout(str, Enum):
    ALL = "all"
    LINE = "line"
    SPECTATOR = "spectator"
    DECOUPLED = "decoupled"


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the three-atom cavity Hamiltonian (hbar = 1).

    ``kappa`` and ``ising`` are stored once per unordered pair in the order
    (1,2), (1,3), (2,3).
    """

    delta: tuple = (0.0, 0.0, 0.0)
    g: tuple = (1.0, 1.0, 1.0)
    kappa: tuple = (0.0, 0.0, 0.0)
    ising: tuple = (0.0, 0.0, 0.0)
    pair_sum_convention: PairSumConvention = PairSumConvention.ORDERED

    def __post_init__(self):
        for name in ("delta", "g", "kappa", "ising"):
            values = tuple(float(v) for v in getattr(self, name))
            if len(values) != 3:
                raise InvalidParameterError(f"{name} needs 3 entries, got {len(values)}")
            if not all(math.isfinite(v) for v in values):
                raise InvalidParameterError(f"{name} has non-finite entries: {values}")
            object.__setattr__(self, name, values)
        object.__setattr__(self, "pair_sum_convention", PairSumConvention(self.pair_sum_convention))

    def pair_kappa(self, j, k):
        return self.kappa[PAIRS.index(tuple(sorted((j, k))))]

    def pair_ising(self, j, k):
        return self.ising[PAIRS.index(tuple(sorted((j, k))))]

    def with_convention(self, convention):
        return replace(self, pair_sum_convention=PairSumConvention(convention))


def _check_finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise InvalidParameterError(f"{name} must be finite, got {value}")


def homogeneous_params(kappa, ising, convention=PairSumConvention.ORDERED):
    _check_finite(kappa=kappa, ising=ising)
    return ModelParams(
        delta=(0.0, 0.0, 0.0),
        g=(1.0, 1.0, 1.0),
        kappa=(kappa,) * 3,
        ising=(ising,) * 3,
        pair_sum_convention=convention,
    )


def quasi_homogeneous_params(kappa, ising, convention=PairSumConvention.ORDERED):
    """Homogeneous couplings plus one extra ``kappa (s-^(1) s+^(2) + h.c.)`` term.

    The extra term is folded into the stored (1,2) dipole coefficient. The
    builder weights a pair by ``2 * multiplicity``, so the stored value grows by
    ``kappa / (2 * multiplicity)``.
    """
    params = homogeneous_params(kappa, ising, convention)
    multiplicity = params.pair_sum_convention.multiplicity
    kappa_12 = kappa * (1.0 + 1.0 / (2 * multiplicity))
    return replace(params, kappa=(kappa_12, kappa, kappa))


def configuration_params(kappa, ising, layout=Layout.ALL, convention=PairSumConvention.ORDERED):
    _check_finite(kappa=kappa, ising=ising)
    layout = Layout(layout)
    if layout is Layout.ALL:
        weights = (1.0, 1.0, 1.0)
    elif layout is Layout.LINE:
        weights = (1.0, 0.0, 1.0)
    elif layout is Layout.SPECTATOR:
        weights = (1.0, 0.0, 0.0)
    else:
        weights = (0.0, 0.0, 0.0)

    return ModelParams(
        kappa=tuple(kappa * w for w in weights),
        ising=tuple(ising * w for w in weights),
        pair_sum_convention=convention,
    )
