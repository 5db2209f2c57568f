from abc import ABC, abstractmethod


class ConcurrenceStrategy(ABC):
    name = None

    @abstractmethod
    def concurrence(self, rho):
        pass
