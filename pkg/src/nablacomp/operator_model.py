"""Integer signatures of the operator family and semantic composability.

Each operator is identified by its 1-based index ``i`` and described only by
the pair ``(dom, cod)`` of form levels it maps between. Levels run over
``0..m`` with ``m = n // 2``; the function spaces themselves are not modeled.
"""
from __future__ import annotations

from dataclasses import dataclass

from nablacomp.errors import DomainError


@dataclass(frozen=True)
class OperatorSet:
    n: int
    m: int
    signatures: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.signatures) != self.n:
            raise DomainError(f"expected {self.n} signatures, got {len(self.signatures)}")
        for dom, cod in self.signatures:
            if not (0 <= dom <= self.m and 0 <= cod <= self.m):
                raise DomainError(f"level out of range 0..{self.m}: {(dom, cod)}")

    def dom(self, i: int) -> int:
        return self.signatures[self._check(i) - 1][0]

    def cod(self, i: int) -> int:
        return self.signatures[self._check(i) - 1][1]

    def _check(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise DomainError(f"operator index {i} outside 1..{self.n}")
        return i


def build_operator_set(n: int) -> OperatorSet:
    """Return the signatures of the n operators acting on R^n.

    Ascending operators come first (``A_{i-1} -> A_i`` for ``i <= m``); for
    odd n a single middle operator maps ``A_m`` to itself; the remaining
    operators descend (``A_{n-i+1} -> A_{n-i}``).
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    m = n // 2
    sigs = []
    for i in range(1, n + 1):
        if i <= m:
            sigs.append((i - 1, i))
        elif n % 2 == 1 and i == m + 1:
            sigs.append((m, m))
        else:
            sigs.append((n - i + 1, n - i))
    return OperatorSet(n=n, m=m, signatures=tuple(sigs))


def composable(ops: OperatorSet, i: int, j: int) -> bool:
    """True iff applying operator ``j`` after operator ``i`` is meaningful."""
    return ops.cod(i) == ops.dom(j)
