from ..misc.errors import ValidationError
from .text_model import KERNEL_TOLERANCE, TextModel


def check_probabilities(probs: dict[str, float], what: str) -> None:
    if any(p < 0 for p in probs.values()):
        raise ValidationError(f"{what} contains a negative probability")
    total = sum(probs.values())
    if abs(total - 1.0) > KERNEL_TOLERANCE:
        raise ValidationError(f"{what} sums to {total!r}, not 1")


def iid_model(char_probs: dict[str, float]) -> TextModel:
    """A single-context model emitting independent characters."""
    check_probabilities(char_probs, "character distribution")
    alphabet = tuple(char_probs)
    row = tuple((i, 0, float(p)) for i, p in enumerate(char_probs.values()) if p > 0)
    return TextModel(("",), 0, alphabet, (row,))


def uniform_model(alphabet: str) -> TextModel:
    return iid_model({character: 1 / len(alphabet) for character in alphabet})
