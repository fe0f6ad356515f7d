from collections import deque
from typing import Callable, Hashable, Iterable, TypeVar

N = TypeVar("N", bound=Hashable)


def reachable(roots: Iterable[N], successors: Callable[[N], Iterable[N]]) -> list[N]:
    """Nodes reachable from `roots` in breadth-first discovery order."""
    order: list[N] = []
    seen: set[N] = set()
    queue = deque()
    for root in roots:
        if root not in seen:
            seen.add(root)
            queue.append(root)
    while queue:
        node = queue.popleft()
        order.append(node)
        for nxt in successors(node):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return order
