"""Exact linear recurrences and matrix powers built from them.

Every entry sequence ``a_ij^(m)`` of the powers of a square matrix obeys the
same linear recurrence, whose coefficients come from the matrix's
characteristic polynomial (Cayley-Hamilton). ``matrix_power_recurrent``
extends those n^2 sequences from the first n powers; ``matrix_power_direct``
is the multiplication oracle it is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from nablacomp.errors import DomainError
from nablacomp.matrix import BigMatrix, as_matrix
from nablacomp.polynomial import IntPolynomial, charpoly_determinant

__all__ = [
    "BigMatrix",
    "LinearRecurrence",
    "extend",
    "make_recurrence",
    "matrix_power_direct",
    "matrix_power_recurrent",
    "terms",
]


@dataclass(frozen=True)
class LinearRecurrence:
    """``g(m) = c_1 g(m-1) + ... + c_d g(m-d)`` with ``g(1)..g(d)`` given."""

    coefficients: tuple[int, ...]
    initial_values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise DomainError("recurrence order must be >= 1")
        if len(self.coefficients) != len(self.initial_values):
            raise DomainError(
                f"need {len(self.coefficients)} initial values, got {len(self.initial_values)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def polynomial(self) -> IntPolynomial:
        """The monic generating polynomial ``x^d - c_1 x^(d-1) - ... - c_d``."""
        return IntPolynomial.from_high([1, *(-c for c in self.coefficients)])


def make_recurrence(p: IntPolynomial, initial: Sequence[int]) -> LinearRecurrence:
    if not p.is_monic():
        raise DomainError(f"polynomial must be monic: {p}")
    d = p.degree
    if d < 1:
        raise DomainError("polynomial degree must be >= 1")
    if len(initial) != d:
        raise DomainError(f"need {d} initial values, got {len(initial)}")
    coeffs = tuple(-p.coeff(d - r) for r in range(1, d + 1))
    return LinearRecurrence(coeffs, tuple(int(v) for v in initial))


def terms(rec: LinearRecurrence, k: int) -> list[int]:
    """``[g(1), ..., g(k)]``."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    out = list(rec.initial_values[:k])
    c = rec.coefficients
    d = rec.order
    while len(out) < k:
        out.append(sum(c[r] * out[-1 - r] for r in range(d) if c[r]))
    return out


def extend(rec: LinearRecurrence, k: int) -> int:
    """The k-th term (1-based) of the sequence."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k <= rec.order:
        return rec.initial_values[k - 1]
    window = list(rec.initial_values)
    c = rec.coefficients
    d = rec.order
    for _ in range(k - d):
        nxt = sum(c[r] * window[-1 - r] for r in range(d) if c[r])
        window.append(nxt)
        del window[0]
    return window[-1]


def matrix_power_direct(a, m: int) -> BigMatrix:
    """``A^m`` by binary exponentiation."""
    a = as_matrix(a)
    if m < 1:
        raise DomainError(f"exponent must be >= 1, got {m}")
    result = None
    base = a
    while m:
        if m & 1:
            result = base if result is None else result @ base
        m >>= 1
        if m:
            base = base @ base
    return result


def matrix_power_recurrent(a, m: int) -> BigMatrix:
    """``A^m`` from the shared characteristic recurrence of its entries."""
    a = as_matrix(a)
    if m < 1:
        raise DomainError(f"exponent must be >= 1, got {m}")
    n = a.n
    if m <= n:
        return matrix_power_direct(a, m)
    powers = [a]
    for _ in range(n - 1):
        powers.append(powers[-1] @ a)
    shared = make_recurrence(charpoly_determinant(a), [0] * n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            rec = LinearRecurrence(shared.coefficients, tuple(p[i, j] for p in powers))
            row.append(extend(rec, m))
        rows.append(tuple(row))
    return BigMatrix(tuple(rows))
