from modules.entanglement.strategies.concurrence_strategy import ConcurrenceStrategy
from modules.entanglement.strategies.pure_strategy import PureConcurrenceStrategy
from modules.entanglement.strategies.quasipure_strategy import QuasiPureStrategy
from modules.entanglement.strategies.upper_bound_strategy import UpperBoundStrategy


class EntanglementContext:
    def __init__(self, strategy: ConcurrenceStrategy):
        self.strategy = strategy

    def set_strategy(self, strategy: ConcurrenceStrategy):
        self.strategy = strategy

    def concurrence(self, rho):
        return self.strategy.concurrence(rho)

    @classmethod
    def for_name(cls, name, **options):
        strategies = {
            PureConcurrenceStrategy.name: PureConcurrenceStrategy,
            QuasiPureStrategy.name: QuasiPureStrategy,
            UpperBoundStrategy.name: UpperBoundStrategy,
        }
        return cls(strategies[name](**options))
