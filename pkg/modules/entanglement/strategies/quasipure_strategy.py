from modules.entanglement.concurrence import concurrence_quasipure
from modules.entanglement.strategies.concurrence_strategy import ConcurrenceStrategy


class QuasiPureStrategy(ConcurrenceStrategy):
    name = "quasi_pure"

    def concurrence(self, rho):
        return concurrence_quasipure(rho)
