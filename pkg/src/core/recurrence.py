from typing import Iterator, Literal

import torch
from einops import rearrange, reduce
from jaxtyping import Float64
from torch import Tensor

from ..misc.errors import ValidationError
from .distribution import Distribution
from .doubling import doubling_table
from .paa import Paa

Method = Literal["basic", "doubling"]


def initial_table(paa: Paa) -> Float64[Tensor, "state value"]:
    table = torch.zeros((paa.num_states, len(paa.value_domain)), dtype=torch.float64)
    table[paa.start_state, paa.value_domain.index(paa.start_value)] = 1.0
    return table


def active_values(table: Float64[Tensor, "state value"]) -> Tensor:
    return (table != 0).any(dim=0).nonzero().squeeze(-1)


def push_states(paa: Paa, table: Float64[Tensor, "state value"]) -> Float64[Tensor, "state value"]:
    """P(Q_t = q', V_{t-1} = v) from the step t-1 table."""
    active = active_values(table)
    pushed = torch.zeros_like(table)
    pushed[:, active] = paa.transitions.push(table[:, active])
    return pushed


def apply_operations(
    paa: Paa,
    table: Float64[Tensor, "state value"],
) -> Float64[Tensor, "state value"]:
    """Let every state draw its emission and update the value."""
    num_states, num_values = table.shape
    active = active_values(table)
    sub = table[:, active]
    transfer = paa.transfer
    offsets = torch.arange(num_states, dtype=torch.int64)[:, None] * num_values
    result = torch.zeros(num_states * num_values, dtype=torch.float64)
    for slot in range(transfer.weights.shape[1]):
        target = offsets + transfer.value_maps[:, slot, active]
        mass = sub * transfer.weights[:, slot, None]
        result.index_add_(0, rearrange(target, "q a -> (q a)"), rearrange(mass, "q a -> (q a)"))
    return rearrange(result, "(q v) -> q v", q=num_states)


def step(paa: Paa, table: Float64[Tensor, "state value"]) -> Float64[Tensor, "state value"]:
    return apply_operations(paa, push_states(paa, table))


def iterate_tables(paa: Paa, n: int) -> Iterator[Float64[Tensor, "state value"]]:
    """Yield the state-value tables f_1, ..., f_n of the push recurrence."""
    table = initial_table(paa)
    for _ in range(n):
        table = step(paa, table)
        yield table


def state_value_table(paa: Paa, n: int, method: Method = "basic") -> Float64[Tensor, "state value"]:
    if n < 0:
        raise ValidationError("step count must be nonnegative")
    if method == "doubling":
        return doubling_table(paa, n)
    if method != "basic":
        raise ValidationError(f"unknown method {method!r}")
    table = initial_table(paa)
    for table in iterate_tables(paa, n):
        pass
    return table


def state_value_distribution(paa: Paa, n: int, method: Method = "basic") -> Distribution:
    table = state_value_table(paa, n, method)
    values = paa.value_domain.values
    q_index, v_index = table.nonzero(as_tuple=True)
    return Distribution.from_pairs(
        ((paa.labels[q], values[v]), table[q, v].item())
        for q, v in zip(q_index.tolist(), v_index.tolist())
    )


def value_marginal(paa: Paa, table: Float64[Tensor, "state value"]) -> Distribution:
    marginal = reduce(table, "q v -> v", "sum")
    values = paa.value_domain.values
    return Distribution.from_pairs(
        (values[v], marginal[v].item()) for v in marginal.nonzero().squeeze(-1).tolist()
    )


def value_distribution(paa: Paa, n: int, method: Method = "basic") -> Distribution:
    return value_marginal(paa, state_value_table(paa, n, method))
