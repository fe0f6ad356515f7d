from typing import Hashable

from tabulate import tabulate
from tqdm import tqdm

from ..core import Distribution, TruncatedAdd, ValueDomain
from ..core.waiting_time import waiting_time_values
from ..daa import Daa, paa_from_daa
from ..misc.errors import ValidationError
from ..textmodel import TextModel, periodic_model
from .dispensation import Dispensation

START = ("", -1)
TAIL_TOLERANCE = 1e-9


def flow_daa(dispensation: Dispensation) -> Daa:
    """Counts the flows needed to sequence the text read so far.

    ("", i) is entered by the first nucleotide, dispensed at index i after
    i + 1 flows. (i, j) means the previous nucleotide was dispensed at index
    i and the current one at j; it costs the cyclic distance from i to j,
    which is 0 within a homopolymer run.
    """
    d = dispensation
    labels: list[Hashable] = [START]
    labels += [("", i) for i in range(d.length)]
    labels += [(i, j) for i in range(d.length) for j in range(d.length)]
    index = {label: q for q, label in enumerate(labels)}

    def successor(label: Hashable, nucleotide: str) -> int:
        _, current = label
        if label == START:
            return index[("", d.forward(0, nucleotide))]
        target = (current + d.forward(current, nucleotide)) % d.length
        return index[(current, target)]

    def emission(label: Hashable) -> int:
        previous, current = label
        if previous == "":
            return current + 1
        return (current - previous) % d.length

    bound = d.flows + 1
    return Daa(
        labels=tuple(labels),
        start_state=0,
        alphabet=tuple(d.alphabet),
        delta=tuple(tuple(successor(label, a) for a in d.alphabet) for label in labels),
        value_domain=ValueDomain.integer_range(0, bound),
        start_value=0,
        emissions=tuple(emission(label) for label in labels),
        operations=(TruncatedAdd(bound),) * len(labels),
    )


def read_length_distribution(model: TextModel, dispensation: Dispensation, nmax: int) -> Distribution:
    """P(read length = l) for l <= nmax; the tail is P(read length > nmax).

    A nucleotide is read if the flows up to and including it stay within the
    budget, so the read length is one less than the first step whose flow
    count exceeds it.
    """
    if nmax < 1:
        raise ValidationError("nmax must be at least 1")
    paa = paa_from_daa(flow_daa(dispensation), model)
    waiting = waiting_time_values(paa, {dispensation.flows + 1}, nmax + 1)
    return waiting.shifted(-1)


def expected_read_length(model: TextModel, dispensation: Dispensation, nmax: int) -> float:
    distribution = read_length_distribution(model, dispensation, nmax)
    if distribution.tail > TAIL_TOLERANCE:
        raise ValidationError(
            f"P(read length > {nmax}) = {distribution.tail:.3e}; increase nmax"
        )
    return distribution.mean()


def read_length_for_text(text: str, dispensation: Dispensation) -> int:
    """Read length of one template; a read never exceeds the template."""
    if not text:
        raise ValidationError("template must be nonempty")
    model = periodic_model(text, dispensation.alphabet)
    distribution = read_length_distribution(model, dispensation, len(text))
    certain = [length for length, p in distribution.items() if p > 0.5]
    return min(certain[0], len(text)) if certain else len(text)


def compare_orders(
    model: TextModel,
    orders: list[str],
    flows: int,
    nmax: int,
    quiet: bool = True,
) -> list[tuple[str, float]]:
    """Expected read length per dispensation order, longest first."""
    results = [
        (order, expected_read_length(model, Dispensation(order, flows, "".join(model.alphabet)), nmax))
        for order in tqdm(orders, desc="orders", disable=quiet)
    ]
    return sorted(results, key=lambda item: (-item[1], item[0]))


def format_comparison(results: list[tuple[str, float]]) -> str:
    return tabulate([(order, f"{mean:.3f}") for order, mean in results], ["Order", "E[length]"])
