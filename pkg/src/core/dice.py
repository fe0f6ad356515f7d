from .operation import Maximum
from .paa import Paa
from .transitions import Transitions
from .value_domain import ValueDomain

DICE = (6, 12, 20)


def dice_paa() -> Paa:
    """Three dice chosen uniformly at random in every step; the value is the maximum face."""
    labels = ("start",) + tuple(f"d{faces}" for faces in DICE)
    edges = [(q, 1 + d, 1 / len(DICE)) for q in range(len(labels)) for d in range(len(DICE))]
    emissions = (((0, 1.0),),) + tuple(
        tuple((face, 1 / faces) for face in range(1, faces + 1)) for faces in DICE
    )
    return Paa(
        labels=labels,
        start_state=0,
        transitions=Transitions.from_edges(len(labels), edges),
        value_domain=ValueDomain.integer_range(0, max(DICE)),
        start_value=0,
        emissions=emissions,
        operations=(Maximum(),) * len(labels),
    )
