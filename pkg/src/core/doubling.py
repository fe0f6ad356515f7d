from dataclasses import dataclass

import torch
from einops import einsum, rearrange
from jaxtyping import Float64
from torch import Tensor

from .paa import Paa
from .resource import guard_cells


@dataclass(frozen=True)
class DoublingKernel:
    """The t-step conditional kernel U^(t)(q1, q2, v1, v2).

    For truncated additions the kernel only depends on v2 - v1, so `shift`
    stores U^(t)(q1, q2, 0, d) with the last bucket d = M absorbing overflow.
    Otherwise `table` holds the full four-index kernel.
    """

    steps: int
    table: Float64[Tensor, "q1 v1 q2 v2"] | None = None
    shift: Float64[Tensor, "q1 q2 d"] | None = None

    @property
    def is_shift(self) -> bool:
        return self.shift is not None

    def compose(self, other: "DoublingKernel") -> "DoublingKernel":
        """Chapman-Kolmogorov: U^(t1 + t2) from U^(t1) and U^(t2)."""
        if self.is_shift:
            return DoublingKernel(self.steps + other.steps, shift=compose_shift(self.shift, other.shift))
        q, v = self.table.shape[:2]
        left = rearrange(self.table, "a u b w -> (a u) (b w)")
        right = rearrange(other.table, "a u b w -> (a u) (b w)")
        return DoublingKernel(
            self.steps + other.steps,
            table=rearrange(left @ right, "(a u) (b w) -> a u b w", a=q, u=v, b=q, w=v),
        )


def compose_shift(
    left: Float64[Tensor, "a b x"],
    right: Float64[Tensor, "b c y"],
) -> Float64[Tensor, "a c d"]:
    bound = left.shape[-1] - 1
    joint = einsum(left, right, "a b x, b c y -> a c x y")
    steps = torch.arange(bound + 1)
    target = (steps[:, None] + steps[None, :]).clamp(max=bound)
    result = torch.zeros((left.shape[0], right.shape[1], bound + 1), dtype=torch.float64)
    result.index_add_(2, rearrange(target, "x y -> (x y)"), rearrange(joint, "a c x y -> a c (x y)"))
    return result


def one_step_kernel(paa: Paa) -> DoublingKernel:
    num_states = paa.num_states
    num_values = len(paa.value_domain)
    transition = paa.transitions.dense()
    transfer = paa.transfer
    if paa.is_truncated_addition():
        guard_cells(num_states * num_states * num_values * num_values, "doubling kernel")
        bound = num_values - 1
        # E[q, d]: probability that state q adds d (clamped at the bound).
        increments = torch.zeros((num_states, num_values), dtype=torch.float64)
        for q, emission in enumerate(paa.emissions):
            for e, p in emission:
                increments[q, min(e, bound)] += p
        return DoublingKernel(1, shift=einsum(transition, increments, "a b, b d -> a b d"))
    guard_cells((num_states * num_values) ** 2, "doubling kernel")
    # A[q, v, v']: value update of state q.
    update = torch.zeros((num_states, num_values, num_values), dtype=torch.float64)
    flat = rearrange(update, "q v w -> (q v) w")
    for slot in range(transfer.weights.shape[1]):
        index = rearrange(transfer.value_maps[:, slot, :], "q v -> (q v) ()")
        weight = transfer.weights[:, slot].repeat_interleave(num_values)[:, None]
        flat.scatter_add_(1, index, weight)
    update = rearrange(flat, "(q v) w -> q v w", q=num_states)
    return DoublingKernel(1, table=einsum(transition, update, "a b, b v w -> a v b w"))


def identity_kernel(paa: Paa, shift: bool) -> DoublingKernel:
    num_states = paa.num_states
    num_values = len(paa.value_domain)
    if shift:
        kernel = torch.zeros((num_states, num_states, num_values), dtype=torch.float64)
        kernel[:, :, 0] = torch.eye(num_states, dtype=torch.float64)
        return DoublingKernel(0, shift=kernel)
    eye = torch.eye(num_states * num_values, dtype=torch.float64)
    table = rearrange(
        eye,
        "(a u) (b w) -> a u b w",
        a=num_states,
        u=num_values,
        b=num_states,
        w=num_values,
    )
    return DoublingKernel(0, table=table)


def kernel_power(paa: Paa, steps: int) -> DoublingKernel:
    """U^(steps) by repeated squaring of the one-step kernel."""
    power = one_step_kernel(paa)
    result = identity_kernel(paa, power.is_shift)
    while steps:
        if steps & 1:
            result = result.compose(power)
        steps >>= 1
        if steps:
            power = power.compose(power)
    return result


def doubling_table(paa: Paa, steps: int) -> Float64[Tensor, "state value"]:
    kernel = kernel_power(paa, steps)
    start = paa.start_state
    v0 = paa.value_domain.index(paa.start_value)
    if not kernel.is_shift:
        return kernel.table[start, v0].clone()
    num_values = len(paa.value_domain)
    bound = num_values - 1
    target = (v0 + torch.arange(num_values)).clamp(max=bound)
    table = torch.zeros((paa.num_states, num_values), dtype=torch.float64)
    table.index_add_(1, target, kernel.shift[start])
    return table
