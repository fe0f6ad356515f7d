from dataclasses import dataclass
from typing import Hashable

import torch
from einops import einsum, rearrange
from jaxtyping import Float64
from torch import Tensor

from ..misc.errors import ValidationError
from .text_model import KERNEL_TOLERANCE, TextModel


@dataclass(frozen=True, eq=False)
class Hmm:
    """A character-emitting hidden Markov model.

    The chain starts in `start` without emitting; every step moves along
    `transitions` and the entered state emits a character.
    """

    states: tuple[Hashable, ...]
    start: int
    alphabet: tuple[str, ...]
    transitions: Float64[Tensor, "state next"]
    emissions: Float64[Tensor, "state character"]

    def __post_init__(self) -> None:
        n = len(self.states)
        if self.transitions.shape != (n, n):
            raise ValidationError("transition matrix does not match the states")
        if self.emissions.shape != (n, len(self.alphabet)):
            raise ValidationError("emission matrix does not match states and alphabet")
        if not 0 <= self.start < n:
            raise ValidationError("start is not a state of the HMM")
        for name, matrix in (("transition", self.transitions), ("emission", self.emissions)):
            if (matrix < 0).any():
                raise ValidationError(f"{name} probabilities must be nonnegative")
            worst = (matrix.sum(dim=1) - 1).abs().max().item()
            if worst > KERNEL_TOLERANCE:
                raise ValidationError(f"{name} rows are not stochastic (off by {worst:.3e})")

    @property
    def num_states(self) -> int:
        return len(self.states)


def forward_probability(hmm: Hmm, text: str) -> float:
    """P(text) by the forward algorithm."""
    index = {character: i for i, character in enumerate(hmm.alphabet)}
    alpha = torch.zeros(hmm.num_states, dtype=torch.float64)
    alpha[hmm.start] = 1.0
    for character in text:
        if character not in index:
            raise ValidationError(f"character {character!r} is not in the alphabet")
        alpha = (alpha @ hmm.transitions) * hmm.emissions[:, index[character]]
    return alpha.sum().item()


def from_hmm(hmm: Hmm) -> TextModel:
    """phi(c, a, c') = T(c, c') * mu_{c'}(a)."""
    kernel = einsum(hmm.transitions, hmm.emissions, "c d, d a -> c a d")
    rows = []
    for c in range(hmm.num_states):
        a_index, d_index = kernel[c].nonzero(as_tuple=True)
        rows.append(
            tuple(
                (a, d, kernel[c, a, d].item())
                for a, d in zip(a_index.tolist(), d_index.tolist())
            )
        )
    return TextModel(hmm.states, hmm.start, hmm.alphabet, tuple(rows))


def to_hmm(model: TextModel) -> Hmm:
    """An HMM over context pairs (c1, c2), entered by the step c1 -> c2.

    State (c1, c2) moves to (c2, c3) with probability sum_a phi(c2, a, c3) and
    emits a with probability phi(c1, a, c2) normalized over a. Pairs that are
    never entered emit uniformly.
    """
    n = model.num_contexts
    kernel = model.kernel_tensor
    step = kernel.sum(dim=0)
    states = tuple((c1, c2) for c1 in model.contexts for c2 in model.contexts)
    transitions = torch.zeros((n, n, n, n), dtype=torch.float64)
    for c2 in range(n):
        transitions[:, c2, c2, :] = step[c2]
    emissions = rearrange(kernel, "a c d -> (c d) a")
    totals = emissions.sum(dim=1, keepdim=True)
    uniform = torch.full_like(emissions, 1 / len(model.alphabet))
    emissions = torch.where(totals > 0, emissions / totals.clamp(min=1e-300), uniform)
    c0 = model.start_context
    return Hmm(
        states,
        c0 * n + c0,
        model.alphabet,
        transitions.reshape(n * n, n * n),
        emissions,
    )
