from dataclasses import dataclass


@dataclass
class OpCounter:
    """Tally of F_{q^m} operations performed by an algorithm.

    Counts are nominal: vectorized kernels add the number of scalar
    operations they stand for, zeros included.
    """

    muls: int = 0
    adds: int = 0
    frobs: int = 0

    @property
    def total(self):
        return self.muls + self.adds

    def reset(self):
        self.muls = self.adds = self.frobs = 0
