from collections import deque
from typing import Iterable

from ..misc.errors import ValidationError
from .counting import CountingDfa


def aho_corasick(patterns: Iterable[str], alphabet: Iterable[str]) -> CountingDfa:
    """The Aho-Corasick automaton of a finite string set as a total DFA.

    States are the distinct pattern prefixes in breadth-first order; the
    count of a state is the number of patterns that are suffixes of it.
    """
    patterns = sorted(set(patterns))
    alphabet = tuple(alphabet)
    if not patterns:
        raise ValidationError("need at least one pattern")
    if any(not pattern for pattern in patterns):
        raise ValidationError("patterns must be nonempty strings")
    for pattern in patterns:
        if not set(pattern) <= set(alphabet):
            raise ValidationError(f"pattern {pattern!r} uses characters outside the alphabet")

    # Trie.
    goto: list[dict[str, int]] = [{}]
    prefixes = [""]
    out = [0]
    for pattern in patterns:
        node = 0
        for character in pattern:
            if character not in goto[node]:
                goto.append({})
                prefixes.append(prefixes[node] + character)
                out.append(0)
                goto[node][character] = len(goto) - 1
            node = goto[node][character]
        out[node] += 1

    # Failure links in breadth-first order, folded into a total transition table.
    fail = [0] * len(goto)
    order = []
    queue = deque(goto[0].values())
    while queue:
        node = queue.popleft()
        order.append(node)
        for character, child in goto[node].items():
            queue.append(child)
            failure = fail[node]
            while failure and character not in goto[failure]:
                failure = fail[failure]
            fail[child] = goto[failure].get(character, 0)
            out[child] += out[fail[child]]

    delta: list[list[int]] = [[0] * len(alphabet) for _ in goto]
    for a, character in enumerate(alphabet):
        delta[0][a] = goto[0].get(character, 0)
    for node in order:
        for a, character in enumerate(alphabet):
            delta[node][a] = goto[node].get(character, delta[fail[node]][a])

    # Renumber breadth-first so that labels come out by depth.
    ranking = sorted(range(len(goto)), key=lambda q: (len(prefixes[q]), prefixes[q]))
    index = {q: i for i, q in enumerate(ranking)}
    return CountingDfa(
        labels=tuple(prefixes[q] for q in ranking),
        start=0,
        alphabet=alphabet,
        delta=tuple(tuple(index[r] for r in delta[q]) for q in ranking),
        counts=tuple(out[q] for q in ranking),
    )
