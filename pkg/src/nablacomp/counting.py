"""Counting meaningful k-th order compositions, f(k), by independent routes.

``count_matrix`` sums the entries of ``A^(k-1)``; ``count_recurrence``
bootstraps f(1)..f(n) from it and runs the characteristic recurrence;
``count_enumerate`` walks operator sequences using only the signature table;
``count_closed_form`` gives the Fibonacci formulas known for n = 3 and n = 6.
"""
from __future__ import annotations

from dataclasses import dataclass

from nablacomp.errors import DomainError, ResourceError
from nablacomp.graph import adjacency_matrix
from nablacomp.matrix import BigMatrix
from nablacomp.operator_model import build_operator_set, composable
from nablacomp.polynomial import charpoly_explicit, reduced_recurrence_poly
from nablacomp.recurrence import make_recurrence, matrix_power_direct, terms

ENUMERATION_LIMIT = 10**7
METHODS = ("matrix", "recurrence", "enumerate", "closed")


@dataclass(frozen=True)
class CountSeries:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """f(k), 1-based."""
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


def _check(n: int, k: int) -> None:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")


def count_matrix(n: int, k: int) -> int:
    _check(n, k)
    if k == 1:
        return n
    return sum(sum(row) for row in matrix_power_direct(adjacency_matrix(n), k - 1).rows)


def _matrix_series(n: int, k_max: int) -> list[int]:
    a = adjacency_matrix(n)
    out = [n]
    p = a
    for _ in range(1, k_max):
        out.append(sum(sum(row) for row in p.rows))
        p = p @ a
    return out


def recurrence_for(n: int, reduced: bool = False):
    """The recurrence driving f, seeded from matrix-route initial values.

    With ``reduced`` the ``x^s`` factor of the characteristic polynomial is
    dropped first; the lower-order recurrence reproduces the same values.
    Returns ``(rec, shift)``.
    """
    p = charpoly_explicit(n)
    shift = 0
    if reduced:
        p, shift = reduced_recurrence_poly(p)
    return make_recurrence(p, _matrix_series(n, p.degree)), shift


def count_recurrence(n: int, k: int, reduced: bool = False) -> int:
    _check(n, k)
    rec, _ = recurrence_for(n, reduced)
    return terms(rec, k)[-1]


def _successors(n: int) -> list[list[int]]:
    ops = build_operator_set(n)
    return [
        [j for j in range(1, n + 1) if composable(ops, i, j)] for i in range(1, n + 1)
    ]


def _guard(n: int, k: int, succ: list[list[int]], limit: int) -> None:
    # Size the job before walking it. This estimate only gates the
    # enumeration; it never stands in for the count.
    ways = [1] * n
    for _ in range(k - 1):
        ways = [sum(ways[j - 1] for j in succ[i]) for i in range(n)]
    if sum(ways) > limit:
        raise ResourceError(
            f"more than {limit} compositions for n={n}, k={k}; use the matrix method"
        )


def count_enumerate(n: int, k: int, limit: int = ENUMERATION_LIMIT) -> int:
    """Count operator index sequences of length k with every step composable."""
    _check(n, k)
    succ = _successors(n)
    _guard(n, k, succ, limit)
    total = 0
    # Stack of (operator, sequence length so far); each leaf is one walk.
    stack = [(i, 1) for i in range(n, 0, -1)]
    while stack:
        i, length = stack.pop()
        if length == k:
            total += 1
            continue
        for j in succ[i - 1]:
            stack.append((j, length + 1))
    return total


def fibonacci(i: int) -> int:
    """F_i with F_1 = F_2 = 1, extended to negative i by F_{i-2} = F_i - F_{i-1}."""
    if i < 0:
        f = fibonacci(-i)
        return f if (-i) % 2 == 1 else -f
    # fast doubling: (F_k, F_{k+1})
    a, b = 0, 1
    for bit in bin(i)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        a, b = (d, c + d) if bit == "1" else (c, d)
    return a


def count_closed_form(n: int, k: int) -> int | None:
    """F_{k+3} for n = 3, 2 F_{k+3} for n = 6, ``None`` otherwise."""
    _check(n, k)
    if n == 3:
        return fibonacci(k + 3)
    if n == 6:
        return 2 * fibonacci(k + 3)
    return None


def expected_power_pattern(n: int, k: int) -> BigMatrix:
    """The Fibonacci-patterned form of ``A^k`` for n = 3 or n = 6.

    Negative Fibonacci indices make the patterns valid from k = 1.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    F = fibonacci
    if n == 3:
        rows = [
            [F(k - 1), F(k), F(k)],
            [F(k - 1), F(k), F(k)],
            [F(k - 2), F(k - 1), F(k - 1)],
        ]
    elif n == 6:
        p = k // 2
        if k % 2 == 0:
            a, b, c = F(2 * p - 2), F(2 * p - 1), F(2 * p)
            rows = [
                [b, 0, c, 0, c, 0],
                [0, c, 0, b, 0, c],
                [a, 0, b, 0, b, 0],
                [0, c, 0, b, 0, c],
                [b, 0, c, 0, c, 0],
                [0, b, 0, a, 0, b],
            ]
        else:
            a, b, c = F(2 * p - 1), F(2 * p), F(2 * p + 1)
            rows = [
                [0, c, 0, b, 0, c],
                [b, 0, c, 0, c, 0],
                [0, b, 0, a, 0, b],
                [b, 0, c, 0, c, 0],
                [0, c, 0, b, 0, c],
                [a, 0, b, 0, b, 0],
            ]
    else:
        raise DomainError(f"no displayed power pattern for n={n}")
    return BigMatrix.from_rows(rows)


def series(n: int, k_max: int, method: str = "matrix") -> CountSeries:
    _check(n, k_max)
    if method == "matrix":
        values = _matrix_series(n, k_max)
    elif method == "recurrence":
        rec, _ = recurrence_for(n)
        values = terms(rec, k_max)
    elif method == "enumerate":
        _guard(n, k_max, _successors(n), ENUMERATION_LIMIT)
        values = [count_enumerate(n, k) for k in range(1, k_max + 1)]
    elif method == "closed":
        if count_closed_form(n, 1) is None:
            raise DomainError(f"no closed form for n={n}; available for n=3 and n=6")
        values = [count_closed_form(n, k) for k in range(1, k_max + 1)]
    else:
        raise DomainError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    return CountSeries(n, tuple(values))
