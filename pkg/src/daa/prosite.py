import re
from itertools import product
from typing import Iterable

from ..misc.errors import PatternParseError, UnsupportedFeatureError, ValidationError
from .nfa import GeneralizedString

PROTEIN_ALPHABET = "ACDEFGHIKLMNPQRSTVWY"

ELEMENT = re.compile(
    r"(?P<body>[A-Za-z]|\[[A-Z]+\]|\{[A-Z]+\})(?:\((?P<low>\d+)(?:,(?P<high>\d+))?\))?$"
)


def parse_prosite(pattern: str, alphabet: Iterable[str] = PROTEIN_ALPHABET) -> list[tuple[str, int, int]]:
    """Split a Prosite pattern into (character class, min repeat, max repeat) elements."""
    alphabet = "".join(alphabet)
    text = pattern.strip()
    if text.endswith("."):
        text = text[:-1]
    if not text:
        raise PatternParseError("empty pattern", 0)
    if text.startswith("<") or text.endswith(">"):
        raise UnsupportedFeatureError("sequence anchors < and > are not supported")
    elements = []
    position = 0
    for token in text.split("-"):
        match = ELEMENT.match(token)
        if match is None:
            if "<" in token or ">" in token:
                raise UnsupportedFeatureError("sequence anchors < and > are not supported")
            raise PatternParseError(f"cannot parse element {token!r}", position)
        body = match["body"]
        if body.startswith("{"):
            raise UnsupportedFeatureError("negated classes {...} are not supported")
        if body in ("x", "X"):
            characters = alphabet
        elif body.startswith("["):
            characters = body[1:-1]
        elif body.isupper():
            characters = body
        else:
            raise PatternParseError(f"unexpected lowercase symbol {body!r}", position)
        unknown = set(characters) - set(alphabet)
        if unknown:
            raise ValidationError(f"element {token!r} uses {''.join(sorted(unknown))}, not in the alphabet")
        low = int(match["low"]) if match["low"] else 1
        high = int(match["high"]) if match["high"] else low
        if low < 1 or high < low:
            raise PatternParseError(f"invalid repeat range in {token!r}", position)
        elements.append(("".join(sorted(set(characters))), low, high))
        position += len(token) + 1
    return elements


def expand_prosite(
    pattern: str,
    alphabet: Iterable[str] = PROTEIN_ALPHABET,
) -> list[GeneralizedString]:
    """All generalized strings obtained by fixing every repeat count."""
    elements = parse_prosite(pattern, alphabet)
    choices = [range(low, high + 1) for _, low, high in elements]
    return [
        tuple(
            characters
            for (characters, _, _), repeat in zip(elements, repeats)
            for _ in range(repeat)
        )
        for repeats in product(*choices)
    ]
