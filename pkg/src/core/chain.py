from math import gcd
from typing import Hashable

import torch
from jaxtyping import Float64
from torch import Tensor

from ..misc.errors import ConvergenceError, ValidationError
from .paa import MarkovChain

STATIONARY_TOLERANCE = 1e-12
MAX_ITERATIONS = 10**6


def as_start_vector(chain: MarkovChain, alpha: dict[int, float] | Tensor) -> Float64[Tensor, " state"]:
    if isinstance(alpha, Tensor):
        vector = alpha.to(torch.float64).clone()
    else:
        vector = torch.zeros(chain.num_states, dtype=torch.float64)
        for state, probability in alpha.items():
            vector[state] += probability
    if vector.shape != (chain.num_states,) or (vector < 0).any():
        raise ValidationError("start distribution does not match the chain")
    if abs(vector.sum().item() - 1) > 1e-9:
        raise ValidationError("start distribution does not sum to 1")
    return vector


def state_distribution(
    chain: MarkovChain,
    alpha: dict[int, float] | Tensor,
    steps: int,
) -> Float64[Tensor, " state"]:
    """L(Q_t) of the plain state chain started in `alpha`."""
    vector = as_start_vector(chain, alpha)
    for _ in range(steps):
        vector = chain.transitions.push_vector(vector)
    return vector


def strongly_connected_components(successors: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(len(successors)):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            node, child = work.pop()
            if child == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            recurse = False
            for i in range(child, len(successors[node])):
                nxt = successors[node][i]
                if nxt not in index:
                    work.append((node, i + 1))
                    work.append((nxt, 0))
                    recurse = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if recurse:
                continue
            if low[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(sorted(component))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return components


def closed_classes(successors: list[list[int]]) -> list[list[int]]:
    result = []
    for component in strongly_connected_components(successors):
        members = set(component)
        if all(nxt in members for node in component for nxt in successors[node]):
            result.append(component)
    return result


def period(successors: list[list[int]], component: list[int]) -> int:
    members = set(component)
    level = {component[0]: 0}
    queue = [component[0]]
    result = 0
    while queue:
        node = queue.pop(0)
        for nxt in successors[node]:
            if nxt not in members:
                continue
            if nxt not in level:
                level[nxt] = level[node] + 1
                queue.append(nxt)
            else:
                result = gcd(result, level[node] + 1 - level[nxt])
    return result


def check_ergodic(chain: MarkovChain) -> list[int]:
    """Return the single closed class, or raise naming the failed property."""
    successors = chain.transitions.successors
    classes = closed_classes(successors)
    if len(classes) != 1:
        raise ConvergenceError(
            f"chain is reducible: {len(classes)} closed classes, no unique stationary distribution"
        )
    (component,) = classes
    d = period(successors, component)
    if d != 1:
        raise ConvergenceError(f"chain is periodic with period {d}")
    return component


def stationary_distribution(
    chain: MarkovChain,
    tol: float = STATIONARY_TOLERANCE,
    max_iterations: int = MAX_ITERATIONS,
) -> Float64[Tensor, " state"]:
    """pi = pi T by power iteration.

    Chains with transient states are accepted as long as there is exactly one
    closed class and it is aperiodic; transient states get probability 0.
    """
    component = check_ergodic(chain)
    vector = torch.zeros(chain.num_states, dtype=torch.float64)
    vector[component] = 1.0 / len(component)
    for _ in range(max_iterations):
        updated = chain.transitions.push_vector(vector)
        updated /= updated.sum()
        change = (updated - vector).abs().max().item()
        vector = updated
        if change < tol:
            return vector
    raise ConvergenceError("stationary distribution did not converge", residual=change)


def label_distribution(chain: MarkovChain, vector: Tensor) -> dict[Hashable, float]:
    return {
        chain.labels[i]: vector[i].item() for i in vector.nonzero().squeeze(-1).tolist()
    }
