from modules.entanglement.models.convex_roof_optimizer import ConvexRoofOptimizer
from modules.entanglement.strategies.concurrence_strategy import ConcurrenceStrategy


class UpperBoundStrategy(ConcurrenceStrategy):
    name = "upper_bound"

    def __init__(self, restarts=8, iterations=200, seed=0):
        self.model = ConvexRoofOptimizer(restarts=restarts, iterations=iterations, seed=seed)

    def concurrence(self, rho):
        return self.model.minimize(rho)
