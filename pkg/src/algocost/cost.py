from collections import deque
from typing import Hashable

from ..core import Distribution, Paa, ValueDomain
from ..core.operation import Operation
from ..core.recurrence import state_value_table, value_marginal
from ..core.transitions import StochasticFactor, Transitions
from ..core.value_domain import Marker
from ..misc.errors import ResourceGuardError, ValidationError
from ..textmodel import TextModel
from .spec import AlgorithmSpec

MAX_WINDOWS = 2**20

# Context vector after reading a string, restricted to positive entries.
ContextRow = dict[int, float]


class WindowCost(Operation):
    """(end of the current window, accumulated cost) for a text of length n.

    Emissions are (shift, cost) pairs. Once a shift moves the window end past
    the text the position becomes ENDED and the cost is frozen.
    """

    def __init__(self, length: int, cap: int) -> None:
        self.length = length
        self.cap = cap

    @property
    def tag(self) -> str:
        return f"window-cost({self.length},{self.cap})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        t, cost = value
        if t is Marker.ENDED:
            return value
        shift, extra = emission
        cost = min(cost + extra, self.cap)
        return (t + shift, cost) if t + shift < self.length else (Marker.ENDED, cost)


def extensions(model: TextModel, context: int, length: int) -> list[tuple[str, ContextRow]]:
    """Every string of `length` characters with P(context --string--> c')."""
    layer: list[tuple[str, ContextRow]] = [("", {context: 1.0})]
    for _ in range(length):
        grown = []
        for text, row in layer:
            by_character: dict[int, ContextRow] = {}
            for c, p in row.items():
                for character, target, q in model.kernel[c]:
                    if q > 0:
                        successor = by_character.setdefault(character, {})
                        successor[target] = successor.get(target, 0.0) + p * q
            grown.extend(
                (text + model.alphabet[character], successor)
                for character, successor in sorted(by_character.items())
            )
        layer = grown
    return layer


def window_emission(
    spec: AlgorithmSpec,
    window: str,
    cost_noise: Distribution | None,
) -> tuple[tuple[Hashable, float], ...]:
    shift = spec.shift(window)
    cost = spec.cost(window)
    if not 1 <= shift <= spec.max_shift or not 0 <= cost <= spec.max_cost:
        raise ValidationError(
            f"{spec.name}: window {window!r} has shift {shift} and cost {cost} "
            f"outside of [1, {spec.max_shift}] x [0, {spec.max_cost}]"
        )
    if cost_noise is None:
        return (((shift, cost), 1.0),)
    return tuple(((shift, cost + extra), p) for extra, p in cost_noise.items())


def window_paa(
    spec: AlgorithmSpec,
    model: TextModel,
    n: int,
    cost_noise: Distribution | None = None,
) -> Paa:
    """The automaton that slides `spec`'s windows over a text of length n.

    States are (window, context) pairs. Moving from window w to the next
    window passes through the node (part of w that stays in view, context),
    which keeps the number of edges linear in the number of windows.
    """
    z = spec.window
    if n < z:
        raise ValidationError(f"text length {n} is shorter than the window size {z}")
    if len(model.alphabet) ** z > MAX_WINDOWS:
        raise ResourceGuardError(
            f"{len(model.alphabet)}^{z} windows exceed the limit of {MAX_WINDOWS}"
        )
    if cost_noise is not None and cost_noise.tail > 0:
        raise ValidationError("cost noise must be a complete distribution")
    extra_costs = [0] if cost_noise is None else [extra for extra, _ in cost_noise.items()]
    if any(not isinstance(extra, int) or extra < 0 for extra in extra_costs):
        raise ValidationError("cost noise must be over nonnegative integers")

    cache: dict[tuple[int, int], list[tuple[str, ContextRow]]] = {}
    start = ("", model.start_context)
    states: dict[tuple[str, int], int] = {start: 0}
    kept: dict[tuple[str, int], int] = {}
    into_kept: list[tuple[int, int, float]] = []
    out_of_kept: list[tuple[int, int, float]] = []
    queue = deque([start])
    while queue:
        window, context = queue.popleft()
        overlap = window[spec.shift(window) :] if window else ""
        node = (overlap, context)
        if node not in kept:
            kept[node] = len(kept)
            key = (context, z - len(overlap))
            if key not in cache:
                cache[key] = extensions(model, *key)
            for suffix, row in cache[key]:
                for target, p in row.items():
                    successor = (overlap + suffix, target)
                    if successor not in states:
                        states[successor] = len(states)
                        queue.append(successor)
                    out_of_kept.append((kept[node], states[successor], p))
        into_kept.append((states[(window, context)], kept[node], 1.0))

    cap = (n - z + 1) * (spec.max_cost + max(extra_costs))
    domain = ValueDomain.enumerated(
        [(t, cost) for t in range(z - 1, n) for cost in range(cap + 1)]
        + [(Marker.ENDED, cost) for cost in range(cap + 1)]
    )
    labels = tuple((window, model.contexts[context]) for window, context in states)
    emissions = tuple(
        (((0, 0), 1.0),) if not window else window_emission(spec, window, cost_noise)
        for window, _ in states
    )
    transitions = Transitions(
        (
            StochasticFactor.from_edges(len(states), len(kept), into_kept),
            StochasticFactor.from_edges(len(kept), len(states), out_of_kept),
        )
    )
    return Paa(
        labels=labels,
        start_state=0,
        transitions=transitions,
        value_domain=domain,
        start_value=(z - 1, 0),
        emissions=emissions,
        operations=(WindowCost(n, cap),) * len(states),
    )


def cost_distribution(
    spec: AlgorithmSpec,
    model: TextModel,
    n: int,
    cost_noise: Distribution | None = None,
) -> Distribution:
    """Exact distribution of the total cost of running `spec` on a random text of length n."""
    paa = window_paa(spec, model, n, cost_noise)
    # Every shift is at least 1, so n - z + 1 windows finish any text.
    table = state_value_table(paa, n - spec.window + 1)
    final = value_marginal(paa, table)
    return Distribution.from_pairs(
        (cost, p) for (t, cost), p in final.items() if t is Marker.ENDED
    )


def expected_cost(distribution: Distribution) -> float:
    return distribution.mean()
