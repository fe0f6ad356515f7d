from ..misc.errors import ValidationError
from .iid import check_probabilities
from .text_model import TextModel


def markov_model(
    order: int,
    conditionals: dict[str, dict[str, float]],
    alphabet: str | None = None,
) -> TextModel:
    """An order-r Markov model.

    Contexts are the histories of length up to r. `conditionals[h]` is the
    next-character distribution after history h; the empty history gives the
    distribution of the first character. Only contexts reachable from the
    empty history are built, ordered by (length, history).
    """
    if order < 0:
        raise ValidationError("Markov order must be nonnegative")
    if alphabet is None:
        alphabet = "".join(sorted({c for row in conditionals.values() for c in row}))
    alphabet = tuple(alphabet)
    known = set(alphabet)
    for history, row in conditionals.items():
        if len(history) > order or not set(history) <= known:
            raise ValidationError(f"history {history!r} does not fit an order-{order} model")
        if not set(row) <= known:
            raise ValidationError(f"history {history!r} emits characters outside the alphabet")
        check_probabilities(row, f"conditional row of history {history!r}")

    def successor(history: str, character: str) -> str:
        extended = history + character
        return extended if len(extended) <= order else extended[1:]

    reached = {""}
    frontier = [""]
    while frontier:
        history = frontier.pop()
        if history not in conditionals:
            raise ValidationError(f"reachable history {history!r} has no conditional row")
        for character, p in conditionals[history].items():
            nxt = successor(history, character)
            if p > 0 and nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)

    contexts = tuple(sorted(reached, key=lambda h: (len(h), h)))
    index = {history: i for i, history in enumerate(contexts)}
    char_index = {character: i for i, character in enumerate(alphabet)}
    kernel = tuple(
        tuple(
            (char_index[character], index[successor(history, character)], float(p))
            for character, p in conditionals[history].items()
            if p > 0
        )
        for history in contexts
    )
    return TextModel(contexts, index[""], alphabet, kernel)


def first_order_model(
    alphabet: str,
    matrix: list[list[float]],
    start: list[float],
) -> TextModel:
    """Order-1 model from a transition matrix and the first-character distribution."""
    if len(matrix) != len(alphabet) or len(start) != len(alphabet):
        raise ValidationError("matrix and start distribution must match the alphabet")
    conditionals = {"": dict(zip(alphabet, start))}
    for character, row in zip(alphabet, matrix):
        if len(row) != len(alphabet):
            raise ValidationError("transition matrix must be square")
        conditionals[character] = dict(zip(alphabet, row))
    return markov_model(1, conditionals, alphabet)
