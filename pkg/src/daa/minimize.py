from ..core.value_domain import value_sort_key
from .counting import CountingDfa, prune
from .reachability import reachable


def minimize(cdfa: CountingDfa) -> CountingDfa:
    """Hopcroft's algorithm, starting from the partition by match count.

    The result is renumbered breadth-first from the start state; a state is
    labelled by the smallest label of the states it merges.
    """
    cdfa = prune(cdfa)
    n = cdfa.num_states
    alphabet = range(len(cdfa.alphabet))

    inverse: list[list[list[int]]] = [[[] for _ in range(n)] for _ in alphabet]
    for q, row in enumerate(cdfa.delta):
        for a in alphabet:
            inverse[a][row[a]].append(q)

    groups: dict[int, set[int]] = {}
    for q, count in enumerate(cdfa.counts):
        groups.setdefault(count, set()).add(q)
    partition = [groups[count] for count in sorted(groups)]
    block_of = [0] * n
    for b, block in enumerate(partition):
        for q in block:
            block_of[q] = b

    # All initial blocks but the largest one are splitters.
    largest = max(range(len(partition)), key=lambda b: len(partition[b]))
    worklist = {b for b in range(len(partition)) if b != largest}

    while worklist:
        splitter = set(partition[worklist.pop()])
        for a in alphabet:
            affected: dict[int, set[int]] = {}
            for target in splitter:
                for q in inverse[a][target]:
                    affected.setdefault(block_of[q], set()).add(q)
            for y, inside in affected.items():
                if len(inside) == len(partition[y]):
                    continue
                outside = partition[y] - inside
                partition[y] = inside
                partition.append(outside)
                new = len(partition) - 1
                for q in outside:
                    block_of[q] = new
                if y in worklist:
                    worklist.add(new)
                else:
                    # Only the smaller half is needed.
                    worklist.add(y if len(inside) <= len(outside) else new)

    start = block_of[cdfa.start]

    def successors(b: int) -> list[int]:
        representative = next(iter(partition[b]))
        return [block_of[r] for r in cdfa.delta[representative]]

    order = reachable([start], successors)
    index = {b: i for i, b in enumerate(order)}
    return CountingDfa(
        labels=tuple(
            min((cdfa.labels[q] for q in partition[b]), key=value_sort_key) for b in order
        ),
        start=0,
        alphabet=cdfa.alphabet,
        delta=tuple(tuple(index[r] for r in successors(b)) for b in order),
        counts=tuple(cdfa.counts[next(iter(partition[b]))] for b in order),
        multiplicity=cdfa.multiplicity,
    )
