"""Dense square matrices over Python integers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from nablacomp.errors import DomainError


@dataclass(frozen=True, eq=False)
class BigMatrix:
    rows: tuple[tuple[int, ...], ...]

    # Equality is by entries only, so a 0/1 matrix equals its BigMatrix copy.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0 or any(len(row) != n for row in self.rows):
            raise DomainError("matrix must be square and non-empty")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BigMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> BigMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: BigMatrix) -> BigMatrix:
        return BigMatrix(_matmul(self.rows, other.rows))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def _matmul(a, b):
    # Row-combination form: zero entries of the left factor cost nothing,
    # which matters for the sparse 0/1 adjacency matrices.
    n = len(b[0])
    out = []
    for arow in a:
        acc = [0] * n
        for k, x in enumerate(arow):
            if x:
                brow = b[k]
                for j in range(n):
                    acc[j] += x * brow[j]
        out.append(tuple(acc))
    return tuple(out)


def as_matrix(a: BigMatrix | Sequence[Sequence[int]]) -> BigMatrix:
    return a if isinstance(a, BigMatrix) else BigMatrix.from_rows(a)
