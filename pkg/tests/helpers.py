"""Seeded generators shared by the unit tests."""
import random
from fractions import Fraction
from typing import List

from models import Ensemble, Pattern, Povm, QubitOperator, QubitState
from operators import is_psd, scale

_STEPS = [Fraction(n, d) for n, d in ((1, 2), (1, 4), (1, 8), (-1, 2), (-1, 4), (-1, 8))]


def split(m: QubitOperator, rng: random.Random) -> List[QubitOperator]:
    """Two PSD operators summing to m: halves shifted along one axis, or plain halves."""
    half = scale(m, Fraction(1, 2))
    axis = rng.randrange(3)
    step = rng.choice(_STEPS)
    shift = [Fraction(0)] * 3
    shift[axis] = step * m.alpha
    up = QubitOperator(alpha=half.alpha, r=tuple(c + d for c, d in zip(half.r, shift)))
    down = QubitOperator(alpha=half.alpha, r=tuple(c - d for c, d in zip(half.r, shift)))
    if rng.random() < 0.75 and is_psd(up) and is_psd(down):
        return [up, down]
    return [half, half]


def random_povm(rng: random.Random, max_elements: int = 4) -> Povm:
    elements = [QubitOperator.identity()]
    for _ in range(rng.randrange(max_elements)):
        index = rng.randrange(len(elements))
        elements[index:index + 1] = split(elements[index], rng)
    rng.shuffle(elements)
    return Povm(elements=elements)


def random_ensemble(rng: random.Random, max_povms: int = 4, max_elements: int = 4, name: str = "random") -> Ensemble:
    povms = [random_povm(rng, max_elements) for _ in range(rng.randint(1, max_povms))]
    return Ensemble(name=name, povms=povms)


def random_state(rng: random.Random) -> QubitState:
    grid = [Fraction(n, 4) for n in range(-4, 5)]
    while True:
        s = [rng.choice(grid) for _ in range(3)]
        if sum(c * c for c in s) <= 1:
            return QubitState(s=tuple(s))


def random_pattern(rng: random.Random, max_slots: int = 12) -> Pattern:
    sizes: List[int] = []
    for _ in range(rng.randint(1, 4)):
        size = rng.randint(1, 4)
        if sum(sizes) + size > max_slots:
            break
        sizes.append(size)
    labels = rng.randint(1, sum(sizes))
    return Pattern.of(*([rng.randrange(labels) for _ in range(size)] for size in sizes))
