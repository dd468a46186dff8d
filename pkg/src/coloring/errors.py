from fractions import Fraction


class ColoringError(Exception):
    """Base exception for coloring operations"""
    pass


class InadmissibleEnsembleError(ColoringError):
    """Two elements of one POVM are proportional"""

    def __init__(self, povm: int, slots: tuple[int, int], gamma: Fraction):
        self.povm = povm
        self.slots = slots
        self.gamma = gamma
        super().__init__(
            f"povm {povm}: slot {slots[1]} = {gamma} * slot {slots[0]} (proportional elements)"
        )


class HeavyNoAssignableError(ColoringError):
    """A POVM holds no element with operator norm above 1/2"""

    def __init__(self, povm: int):
        self.povm = povm
        super().__init__(f"povm {povm}: no element with norm above 1/2, nothing to assign")


class TooLargeError(ColoringError):
    """Problem exceeds the brute-force class guard"""
    pass
