from dataclasses import dataclass
from typing import Literal

import torch

from ..core import Distribution, Paa
from ..core.recurrence import iterate_tables
from ..core.waiting_time import waiting_time_states
from ..daa import Daa, paa_from_daa
from ..misc.errors import ValidationError
from ..textmodel import TextModel
from .cleavage import FINISHED, START, CleavageRule, cleavage_daa, is_end
from .masses import MassTable
from .missed import apply_missed_cleavage

FragmentKind = Literal["first", "following"]


@dataclass(frozen=True)
class FragmentDistribution:
    """P(length, integer mass) of one fragment; the tail covers fragments longer than nmax."""

    joint: Distribution
    which: str

    def lengths(self) -> Distribution:
        return self.joint.marginal(lambda value: value[0])

    def masses(self) -> Distribution:
        return self.joint.marginal(lambda value: value[1])


def end_states(paa: Paa) -> list[int]:
    return [
        i for i, label in enumerate(paa.labels) if isinstance(label, tuple) and is_end(label[0])
    ]


def residue_roots(daa: Daa, model: TextModel) -> list[tuple[int, int]]:
    """Every (residue, context) pair, so that fragments can resume in any of them."""
    return [
        (q, c)
        for q, label in enumerate(daa.labels)
        if label not in (START, FINISHED) and not is_end(label)
        for c in range(model.num_contexts)
    ]


def termination_row(paa: Paa, steps: int) -> dict[int, float]:
    """Where the next fragment starts: P(next residue state | fragment ended within `steps`)."""
    ends = end_states(paa)
    vector = torch.zeros(paa.num_states, dtype=torch.float64)
    vector[paa.start_state] = 1.0
    ended = torch.zeros(paa.num_states, dtype=torch.float64)
    for _ in range(steps):
        vector = paa.transitions.push_vector(vector)
        ended[ends] += vector[ends]
    total = ended.sum().item()
    if total <= 0:
        raise ValidationError(f"no fragment ends within {steps} characters")
    row: dict[int, float] = {}
    for i in ends:
        if ended[i] > 0:
            (_, residue), context = paa.labels[i]
            target = paa.label_index[(residue, context)]
            row[target] = row.get(target, 0.0) + ended[i].item() / total
    return row


def fragment_paa(
    model: TextModel,
    rule: CleavageRule,
    masses: MassTable,
    nmax: int,
    which: FragmentKind = "first",
    k: int = 2,
    p_miss: float = 0.0,
) -> Paa:
    """The automaton whose end states carry the mass of the first or the k-th fragment.

    Following fragments start where the previous fragment left off: the start
    row is the distribution of (first residue, context) at its end.
    """
    if nmax < 1:
        raise ValidationError("nmax must be at least 1")
    if which not in ("first", "following"):
        raise ValidationError(f"unknown fragment kind {which!r}")
    if which == "following" and k < 2:
        raise ValidationError("following fragments are numbered from 2")
    terminal = masses.terminal_emission()
    max_mass = nmax * masses.max_mass() + max(mass for mass, _ in terminal)
    daa = cleavage_daa(rule, masses, max_mass)
    roots = residue_roots(daa, model)

    def build(first: bool) -> Paa:
        def emission(q: int):
            label = daa.labels[q]
            if label in (START, FINISHED):
                return ((0, 1.0),)
            if is_end(label):
                return terminal if first else ((0, 1.0),)
            return masses.emission(label)

        return apply_missed_cleavage(paa_from_daa(daa, model, emission, roots), p_miss)

    paa = build(first=True)
    if which == "first":
        return paa
    following = build(first=False)
    for _ in range(k - 1):
        paa = following.with_start_row(termination_row(paa, nmax + 1))
    return paa


def fragment_length_mass(
    model: TextModel,
    rule: CleavageRule,
    masses: MassTable,
    nmax: int,
    which: FragmentKind = "first",
    k: int = 2,
    p_miss: float = 0.0,
) -> FragmentDistribution:
    """Joint distribution of fragment length and integer mass for lengths up to nmax.

    A fragment of length l has ended when its end state is entered in step
    l + 1, reading the first character of the next fragment.
    """
    paa = fragment_paa(model, rule, masses, nmax, which, k, p_miss)
    ends = end_states(paa)
    values = paa.value_domain.values
    pairs = []
    for t, table in enumerate(iterate_tables(paa, nmax + 1), start=1):
        block = table[ends].sum(dim=0)
        pairs.extend(
            ((t - 1, values[v]), block[v].item()) for v in block.nonzero().squeeze(-1).tolist()
        )
    label = "first" if which == "first" else f"following({k})"
    return FragmentDistribution(Distribution.from_pairs(pairs), label)


def fragment_length_dist(
    model: TextModel,
    rule: CleavageRule,
    nmax: int,
    which: FragmentKind = "first",
    k: int = 2,
    p_miss: float = 0.0,
) -> Distribution:
    """Fragment lengths as the waiting time for an end state, minus one."""
    weightless = MassTable({residue: ((0.0, 1.0),) for residue in rule.alphabet})
    paa = fragment_paa(model, rule, weightless, nmax, which, k, p_miss)
    waiting = waiting_time_states(paa.chain, {paa.start_state: 1.0}, end_states(paa), nmax + 1)
    return waiting.shifted(-1)


def fragment_mass_distribution(
    model: TextModel,
    rule: CleavageRule,
    masses: MassTable,
    nmax: int,
    which: FragmentKind = "first",
    k: int = 2,
    p_miss: float = 0.0,
) -> Distribution:
    return fragment_length_mass(model, rule, masses, nmax, which, k, p_miss).masses()
