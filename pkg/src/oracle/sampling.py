from bisect import bisect_right
from typing import Iterator

import torch

from ..misc.errors import ValidationError
from ..textmodel import TextModel

CumulativeRows = tuple[tuple[list[float], list[tuple[int, int]]], ...]


def cumulative_rows(model: TextModel) -> CumulativeRows:
    rows = []
    for row in model.kernel:
        cumulative, outcomes, total = [], [], 0.0
        for character, target, p in row:
            if p > 0:
                total += p
                cumulative.append(total)
                outcomes.append((character, target))
        rows.append((cumulative, outcomes))
    return tuple(rows)


def as_generator(seed: int | torch.Generator) -> torch.Generator:
    if isinstance(seed, torch.Generator):
        return seed
    return torch.Generator().manual_seed(seed)


def walk(model: TextModel, rows: CumulativeRows, n: int, generator: torch.Generator) -> str:
    uniforms = torch.rand(n, dtype=torch.float64, generator=generator).tolist()
    context = model.start_context
    characters = []
    for u in uniforms:
        cumulative, outcomes = rows[context]
        # Rows sum to 1 only up to rounding.
        pick = min(bisect_right(cumulative, u * cumulative[-1]), len(outcomes) - 1)
        character, context = outcomes[pick]
        characters.append(model.alphabet[character])
    return "".join(characters)


def sample_text(model: TextModel, n: int, seed: int | torch.Generator) -> str:
    """Walk the context chain for n steps, emitting one character per step."""
    if n < 0:
        raise ValidationError("text length must be nonnegative")
    return walk(model, cumulative_rows(model), n, as_generator(seed))


def sample_texts(
    model: TextModel,
    n: int,
    samples: int,
    seed: int | torch.Generator,
) -> Iterator[str]:
    """`samples` texts drawn one after another from the same generator."""
    if n < 0:
        raise ValidationError("text length must be nonnegative")
    rows = cumulative_rows(model)
    generator = as_generator(seed)
    for _ in range(samples):
        yield walk(model, rows, n, generator)
