from typing import Optional

from models import ColoringProblem, ParityArgument


def parity_witness(p: ColoringProblem) -> Optional[ParityArgument]:
    """Odd number of POVMs, every class appearing an even number of times.

    Summing yes-counts over all POVMs gives the (odd) POVM count, but every yes
    class contributes its (even) appearance count, so no valuation exists.
    """
    if p.povm_count % 2 == 0 or any(target != 1 for target in p.targets):
        return None
    for row in p.incidence:
        if any(not p.classes[class_id].assignable for class_id, _ in row):
            return None
    counts = p.appearance_counts()
    if any(count % 2 for count in counts):
        return None
    return ParityArgument(class_counts=counts, povm_count=p.povm_count)
