from typing import Callable, Hashable

from ..core import Distribution
from ..misc.errors import ResourceGuardError, ValidationError
from ..textmodel import TextModel

ENUMERATION_LIMIT = 10**7

Evaluator = Callable[[str], Hashable]


def enumerate_exact(evaluator: Evaluator, model: TextModel, n: int) -> Distribution:
    """Evaluate every text of length n and weight it by its probability.

    Texts are generated depth first while carrying P(prefix, context), so
    no automaton is involved.
    """
    if n < 0:
        raise ValidationError("text length must be nonnegative")
    if len(model.alphabet) ** n > ENUMERATION_LIMIT:
        raise ResourceGuardError(
            f"{len(model.alphabet)}^{n} texts exceed the enumeration limit of {ENUMERATION_LIMIT}"
        )
    totals: dict[Hashable, float] = {}

    def visit(prefix: str, weights: dict[int, float]) -> None:
        if len(prefix) == n:
            value = evaluator(prefix)
            totals[value] = totals.get(value, 0.0) + sum(weights.values())
            return
        by_character: dict[int, dict[int, float]] = {}
        for context, p in weights.items():
            for character, target, q in model.kernel[context]:
                if q > 0:
                    row = by_character.setdefault(character, {})
                    row[target] = row.get(target, 0.0) + p * q
        for character, row in sorted(by_character.items()):
            visit(prefix + model.alphabet[character], row)

    visit("", {model.start_context: 1.0})
    return Distribution.from_pairs(totals.items())
