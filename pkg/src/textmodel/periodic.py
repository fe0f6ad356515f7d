from ..misc.errors import ValidationError
from .text_model import TextModel


def periodic_model(text: str, alphabet: str | None = None) -> TextModel:
    """A deterministic model that emits `text` over and over."""
    if not text:
        raise ValidationError("periodic model needs a nonempty text")
    alphabet = tuple(alphabet if alphabet is not None else sorted(set(text)))
    if not set(text) <= set(alphabet):
        raise ValidationError("text uses characters outside the alphabet")
    index = {character: i for i, character in enumerate(alphabet)}
    kernel = tuple(
        ((index[character], (i + 1) % len(text), 1.0),) for i, character in enumerate(text)
    )
    return TextModel(tuple(range(len(text))), 0, alphabet, kernel)
