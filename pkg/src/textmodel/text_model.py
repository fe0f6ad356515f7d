from dataclasses import dataclass
from functools import cached_property
from typing import Hashable

import torch
from jaxtyping import Float64
from torch import Tensor

from ..misc.errors import ValidationError

KERNEL_TOLERANCE = 1e-12

# (character index, next context index, probability)
KernelRow = tuple[tuple[int, int, float], ...]


@dataclass(frozen=True, eq=False)
class TextModel:
    """A finite-memory text model.

    In context c the model emits character a and moves to context c' with
    probability phi(c, a, c'); `kernel[c]` lists the nonzero entries.
    """

    contexts: tuple[Hashable, ...]
    start_context: int
    alphabet: tuple[str, ...]
    kernel: tuple[KernelRow, ...]

    def __post_init__(self) -> None:
        if len(set(self.contexts)) != len(self.contexts):
            raise ValidationError("context labels must be unique")
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise ValidationError("alphabet must be a nonempty set of characters")
        if any(len(character) != 1 for character in self.alphabet):
            raise ValidationError("alphabet symbols must be single characters")
        if len(self.kernel) != len(self.contexts):
            raise ValidationError("every context needs a kernel row")
        if not 0 <= self.start_context < len(self.contexts):
            raise ValidationError("start context is not a context of the model")
        for label, row in zip(self.contexts, self.kernel):
            total = 0.0
            for character, target, probability in row:
                if not 0 <= character < len(self.alphabet):
                    raise ValidationError(f"context {label!r} emits an unknown character")
                if not 0 <= target < len(self.contexts):
                    raise ValidationError(f"context {label!r} moves to an unknown context")
                if probability < 0:
                    raise ValidationError(f"context {label!r} has a negative probability")
                total += probability
            if abs(total - 1.0) > KERNEL_TOLERANCE:
                raise ValidationError(f"kernel row of context {label!r} sums to {total!r}")

    @property
    def num_contexts(self) -> int:
        return len(self.contexts)

    @cached_property
    def character_index(self) -> dict[str, int]:
        return {character: i for i, character in enumerate(self.alphabet)}

    def index_of(self, character: str) -> int:
        try:
            return self.character_index[character]
        except KeyError:
            raise ValidationError(f"character {character!r} is not in the alphabet")

    @cached_property
    def kernel_tensor(self) -> Float64[Tensor, "character context next"]:
        tensor = torch.zeros(
            (len(self.alphabet), self.num_contexts, self.num_contexts), dtype=torch.float64
        )
        for c, row in enumerate(self.kernel):
            for character, target, probability in row:
                tensor[character, c, target] += probability
        return tensor

    def has_deterministic_successors(self) -> bool:
        """Whether every (context, character) pair leads to at most one context."""
        for row in self.kernel:
            seen: dict[int, int] = {}
            for character, target, probability in row:
                if probability > 0 and seen.setdefault(character, target) != target:
                    return False
        return True


def string_transition(
    model: TextModel,
    context: int,
    text: str,
) -> Float64[Tensor, " context"]:
    """P(context --text--> c') for every c'."""
    vector = torch.zeros(model.num_contexts, dtype=torch.float64)
    vector[context] = 1.0
    kernel = model.kernel_tensor
    for character in text:
        vector = vector @ kernel[model.index_of(character)]
    return vector


def sequence_probability(model: TextModel, text: str) -> float:
    """P(S_0 ... S_{n-1} = text), marginalizing the context sequence."""
    return string_transition(model, model.start_context, text).sum().item()


def character_marginals(model: TextModel, length: int) -> Float64[Tensor, "position character"]:
    """P(S_i = a) for every position i < length."""
    kernel = model.kernel_tensor
    vector = torch.zeros(model.num_contexts, dtype=torch.float64)
    vector[model.start_context] = 1.0
    marginals = torch.zeros((length, len(model.alphabet)), dtype=torch.float64)
    for position in range(length):
        # joint[a, c'] = sum_c vector[c] phi(c, a, c')
        joint = torch.einsum("c,acd->ad", vector, kernel)
        marginals[position] = joint.sum(dim=1)
        vector = joint.sum(dim=0)
    return marginals
