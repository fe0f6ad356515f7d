from dataclasses import dataclass, field
from functools import cached_property

import torch
from jaxtyping import Float64, Int64
from torch import Tensor

from ..misc.errors import ValidationError

ROW_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class StochasticFactor:
    """A sparse row-stochastic matrix stored as an edge list."""

    num_rows: int
    num_cols: int
    rows: Int64[Tensor, " edge"]
    cols: Int64[Tensor, " edge"]
    probs: Float64[Tensor, " edge"]

    def __post_init__(self) -> None:
        if not (self.rows.shape == self.cols.shape == self.probs.shape):
            raise ValidationError("edge arrays must have equal length")
        if (self.probs < 0).any():
            raise ValidationError("transition probabilities must be nonnegative")
        if len(self.rows) and (
            self.rows.min() < 0
            or self.rows.max() >= self.num_rows
            or self.cols.min() < 0
            or self.cols.max() >= self.num_cols
        ):
            raise ValidationError("transition refers to an unknown state")
        sums = torch.zeros(self.num_rows, dtype=torch.float64)
        sums.index_add_(0, self.rows, self.probs)
        worst = (sums - 1).abs().max().item() if self.num_rows else 0.0
        if worst > ROW_TOLERANCE:
            raise ValidationError(f"transition rows are not stochastic (off by {worst:.3e})")

    @classmethod
    def from_edges(
        cls,
        num_rows: int,
        num_cols: int,
        edges: list[tuple[int, int, float]],
    ) -> "StochasticFactor":
        if edges:
            rows, cols, probs = zip(*edges)
        else:
            rows, cols, probs = (), (), ()
        return cls(
            num_rows,
            num_cols,
            torch.tensor(rows, dtype=torch.int64),
            torch.tensor(cols, dtype=torch.int64),
            torch.tensor(probs, dtype=torch.float64),
        )

    @cached_property
    def transposed(self) -> Tensor:
        return torch.sparse_coo_tensor(
            torch.stack([self.cols, self.rows]),
            self.probs,
            (self.num_cols, self.num_rows),
        ).coalesce()

    def push(self, table: Float64[Tensor, "row value"]) -> Float64[Tensor, "col value"]:
        return torch.sparse.mm(self.transposed, table)

    def dense(self) -> Float64[Tensor, "row col"]:
        matrix = torch.zeros((self.num_rows, self.num_cols), dtype=torch.float64)
        matrix.index_put_((self.rows, self.cols), self.probs, accumulate=True)
        return matrix


@dataclass(frozen=True, eq=False)
class Transitions:
    """A row-stochastic state transition matrix as a chain of sparse factors.

    Most automata use a single factor. Passing through intermediate nodes
    keeps the edge count small when many states share their successors.
    """

    factors: tuple[StochasticFactor, ...]
    num_states: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValidationError("transitions need at least one factor")
        for left, right in zip(self.factors, self.factors[1:]):
            if left.num_cols != right.num_rows:
                raise ValidationError("transition factors do not chain")
        if self.factors[0].num_rows != self.factors[-1].num_cols:
            raise ValidationError("transition matrix is not square")
        object.__setattr__(self, "num_states", self.factors[0].num_rows)

    @classmethod
    def from_edges(cls, num_states: int, edges: list[tuple[int, int, float]]) -> "Transitions":
        return cls((StochasticFactor.from_edges(num_states, num_states, edges),))

    def push(self, table: Float64[Tensor, "state value"]) -> Float64[Tensor, "state value"]:
        """Return T^T @ table, i.e. advance a state-indexed table by one step."""
        for factor in self.factors:
            table = factor.push(table)
        return table

    def push_vector(self, vector: Float64[Tensor, " state"]) -> Float64[Tensor, " state"]:
        return self.push(vector[:, None])[:, 0]

    def dense(self) -> Float64[Tensor, "state state"]:
        matrix = self.factors[0].dense()
        for factor in self.factors[1:]:
            matrix = matrix @ factor.dense()
        return matrix

    @cached_property
    def successors(self) -> list[list[int]]:
        """Adjacency lists of the positive-probability transition graph."""
        frontier: list[set[int]] = [{i} for i in range(self.num_states)]
        for factor in self.factors:
            forward: dict[int, set[int]] = {}
            positive = factor.probs > 0
            for r, c in zip(factor.rows[positive].tolist(), factor.cols[positive].tolist()):
                forward.setdefault(r, set()).add(c)
            frontier = [
                set().union(*(forward.get(node, ()) for node in nodes)) for nodes in frontier
            ]
        return [sorted(nodes) for nodes in frontier]

    def with_new_state(self, row: dict[int, float]) -> "Transitions":
        """Append a state without incoming edges whose outgoing row is `row`."""
        if len(self.factors) != 1:
            raise ValidationError("only single-factor transitions can gain states")
        (factor,) = self.factors
        n = self.num_states
        edges = list(zip(factor.rows.tolist(), factor.cols.tolist(), factor.probs.tolist()))
        edges.extend((n, target, float(p)) for target, p in row.items() if p > 0)
        return Transitions.from_edges(n + 1, edges)
