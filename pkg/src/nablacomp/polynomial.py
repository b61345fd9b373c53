"""Integer polynomials and three routes to the characteristic polynomial.

Characteristic polynomials are monic, ``det(xI - A)``. Coefficients are kept
lowest degree first; anything shown to a user is highest degree first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from nablacomp.errors import DomainError
from nablacomp.matrix import BigMatrix, as_matrix


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_high(cls, coefficients: Iterable[int]) -> IntPolynomial:
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coefficients)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def high_to_low(self) -> list[int]:
        return list(reversed(self.coefficients))

    def shift(self, s: int) -> IntPolynomial:
        """Multiply by x**s."""
        if self.is_zero():
            return self
        return IntPolynomial([0] * s + list(self.coefficients))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coeff(d) + other.coeff(d) for d in range(size))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


def binomial(a: int, b: int) -> int:
    """C(a, b), defined as 0 whenever ``b < 0``, ``a < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")


def charpoly_explicit(n: int) -> IntPolynomial:
    """Binomial-sum formula for the characteristic polynomial of the chain of size n."""
    _check_n(n)
    coeffs: dict[int, int] = {}

    def add(power: int, c: int) -> None:
        if c == 0:
            return
        if power < 0:
            raise AssertionError(f"nonzero term at negative power {power}")
        coeffs[power] = coeffs.get(power, 0) + c

    top = (n + 2) // 4
    if n % 2 == 0:
        half = n // 2
        for k in range(1, top + 2):
            sign = (-1) ** (k - 1)
            add(n - 2 * k + 2, sign * binomial(half - k + 2, k - 1))
    else:
        half = (n + 3) // 2
        for k in range(1, top + 3):
            sign = (-1) ** (k - 1)
            add(n - 2 * k + 2, sign * binomial(half - k, k - 1))
            add(n - 2 * k + 3, sign * binomial(half - k, k - 2))
    return IntPolynomial(coeffs.get(d, 0) for d in range(n + 1))


_BASE = {
    2: IntPolynomial.from_high([1, 0, -1]),
    3: IntPolynomial.from_high([1, -1, -1, 0]),
    4: IntPolynomial.from_high([1, 0, -2, 0, 0]),
    5: IntPolynomial.from_high([1, -1, -2, 1, 0, 0]),
}


@lru_cache(maxsize=None)
def charpoly_recurrence(n: int) -> IntPolynomial:
    """``P_n = x^2 (P_{n-2} - P_{n-4})`` seeded with P_2..P_5."""
    _check_n(n)
    if n in _BASE:
        return _BASE[n]
    table = dict(_BASE)
    for k in range(6, n + 1):
        table[k] = (table[k - 2] - table[k - 4]).shift(2)
    return table[n]


def charpoly_determinant(matrix: BigMatrix | Sequence[Sequence[int]]) -> IntPolynomial:
    """Monic ``det(xI - A)`` by the Faddeev-LeVerrier iteration.

    Every division in the iteration is exact over the integers, so no
    rational arithmetic is needed.
    """
    try:
        a = as_matrix(matrix)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a square integer matrix: {exc}") from exc
    n = a.n
    high = [1]
    m = BigMatrix.identity(n)
    for k in range(1, n + 1):
        am = a @ m
        c, rem = divmod(-am.trace(), k)
        if rem:
            raise AssertionError("inexact division in Faddeev-LeVerrier step")
        high.append(c)
        if k < n:
            m = BigMatrix(
                tuple(
                    tuple(x + c if i == j else x for j, x in enumerate(row))
                    for i, row in enumerate(am.rows)
                )
            )
    return IntPolynomial.from_high(high)


def reduced_recurrence_poly(p: IntPolynomial) -> tuple[IntPolynomial, int]:
    """Split ``p = x^s * q`` with ``q(0) != 0``; returns ``(q, s)``."""
    if p.is_zero():
        raise DomainError("zero polynomial has no reduced form")
    s = next(d for d, c in enumerate(p.coefficients) if c)
    return IntPolynomial(p.coefficients[s:]), s
