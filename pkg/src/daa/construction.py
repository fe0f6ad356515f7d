from typing import Callable, Hashable, Iterable

from ..core.paa import Emission, Paa
from ..core.transitions import Transitions
from ..misc.errors import ValidationError
from ..textmodel.text_model import TextModel
from .daa import Daa
from .reachability import reachable

StatePair = tuple[int, int]


def paa_from_daa(
    daa: Daa,
    model: TextModel,
    emissions: Callable[[int], Emission] | None = None,
    extra_roots: Iterable[StatePair] = (),
) -> Paa:
    """The PAA over (DAA state, context) pairs driven by the text model.

    Only pairs reachable from (q0, c0) are built, plus whatever is reachable
    from `extra_roots`. PAA states are labelled (DAA label, context label).
    `emissions` replaces the Dirac emission of a DAA state by a distribution.
    """
    missing = set(model.alphabet) - set(daa.alphabet)
    if missing:
        raise ValidationError(
            f"text model emits {''.join(sorted(missing))}, which the automaton cannot read"
        )
    to_daa = [daa.index_of(character) for character in model.alphabet]

    def moves(pair: StatePair) -> list[tuple[StatePair, float]]:
        q, c = pair
        return [
            ((daa.delta[q][to_daa[a]], target), p) for a, target, p in model.kernel[c]
        ]

    roots = [(daa.start_state, model.start_context), *extra_roots]
    pairs = reachable(roots, lambda pair: [nxt for nxt, _ in moves(pair)])
    index = {pair: i for i, pair in enumerate(pairs)}
    edges = [(index[pair], index[nxt], p) for pair in pairs for nxt, p in moves(pair)]

    def emission(q: int) -> Emission:
        return emissions(q) if emissions is not None else ((daa.emissions[q], 1.0),)

    labels: tuple[Hashable, ...] = tuple(
        (daa.labels[q], model.contexts[c]) for q, c in pairs
    )
    return Paa(
        labels=labels,
        start_state=0,
        transitions=Transitions.from_edges(len(pairs), edges),
        value_domain=daa.value_domain,
        start_value=daa.start_value,
        emissions=tuple(emission(q) for q, _ in pairs),
        operations=tuple(daa.operations[q] for q, _ in pairs),
    )
