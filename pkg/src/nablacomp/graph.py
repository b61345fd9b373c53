"""Adjacency matrix of the composability digraph."""
from __future__ import annotations

from nablacomp.errors import DomainError
from nablacomp.operator_model import OperatorSet, composable
from nablacomp.matrix import BigMatrix


class ZeroOneMatrix(BigMatrix):
    """Square matrix whose entries are all 0 or 1.

    Row ``i`` is the source operator, column ``j`` the operator applied next.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(x not in (0, 1) for row in self.rows for x in row):
            raise DomainError("entries must be 0 or 1")


def adjacency_matrix(n: int) -> ZeroOneMatrix:
    """Entry (i, j) is 1 iff ``j == i + 1`` or ``i + j == n + 1`` (1-based)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return ZeroOneMatrix(
        tuple(
            tuple(int(j == i + 1 or i + j == n + 1) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
    )


def semantic_adjacency(ops: OperatorSet) -> ZeroOneMatrix:
    n = ops.n
    return ZeroOneMatrix(
        tuple(
            tuple(int(composable(ops, i, j)) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
    )


def edge_count(matrix: BigMatrix) -> int:
    return sum(sum(row) for row in matrix.rows)
