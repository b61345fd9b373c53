"""Reduced recurrences per dimension, compared with the published table.

A relation is stored as ``(order, {offset: coeff})`` meaning
``f(i + order) = sum(coeff * f(i + offset))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from nablacomp.counting import count_enumerate
from nablacomp.polynomial import charpoly_explicit, reduced_recurrence_poly

Relation = tuple[int, dict[int, int]]

PUBLISHED: dict[int, Relation] = {
    3: (2, {1: 1, 0: 1}),
    4: (2, {0: 2}),
    5: (3, {2: 1, 1: 2, 0: -1}),
    6: (4, {2: 3, 0: -1}),
    7: (5, {3: 1, 2: 3, 1: -2, 0: -1}),
    8: (4, {2: 4, 0: -3}),
    9: (5, {4: 1, 3: 4, 2: -3, 1: -3, 0: 1}),
    10: (6, {4: 5, 2: -6, 0: 1}),
}


def derived_relation(n: int) -> Relation:
    q, _ = reduced_recurrence_poly(charpoly_explicit(n))
    d = q.degree
    return d, {t: -q.coeff(t) for t in range(d - 1, -1, -1) if q.coeff(t)}


def format_relation(rel: Relation) -> str:
    order, coeffs = rel

    def term(offset: int) -> str:
        return "f(i)" if offset == 0 else f"f(i+{offset})"

    parts = []
    for offset in sorted(coeffs, reverse=True):
        c = coeffs[offset]
        mag = abs(c)
        body = term(offset) if mag == 1 else f"{mag} {term(offset)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return f"{term(order)} = {' '.join(parts) if parts else '0'}"


def violations(rel: Relation, values) -> list[tuple[int, int, int]]:
    """``(i, predicted, actual)`` for every i where ``values`` breaks ``rel``.

    ``values[0]`` is f(1).
    """
    order, coeffs = rel
    out = []
    for i in range(1, len(values) - order + 1):
        predicted = sum(c * values[i + off - 1] for off, c in coeffs.items())
        actual = values[i + order - 1]
        if predicted != actual:
            out.append((i, predicted, actual))
    return out


@dataclass
class TableRow:
    n: int
    derived: Relation
    published: Relation | None
    oracle: tuple[int, ...] = ()
    published_holds: bool | None = None
    derived_holds: bool | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def matches(self) -> bool | None:
        return None if self.published is None else self.published == self.derived


def table_row(n: int) -> TableRow:
    row = TableRow(n, derived_relation(n), PUBLISHED.get(n))
    if row.matches is False:
        k_max = max(row.derived[0], row.published[0]) + 1
        oracle = [count_enumerate(n, k) for k in range(1, k_max + 1)]
        shown = ", ".join(map(str, oracle))
        bad_pub = violations(row.published, oracle)
        bad_der = violations(row.derived, oracle)
        row.oracle = tuple(oracle)
        row.published_holds = not bad_pub
        row.derived_holds = not bad_der
        msg = f"n={n}: published relation {format_relation(row.published)} "
        if bad_pub:
            i, pred, act = bad_pub[0]
            msg += f"fails on enumerated series {shown} (i={i}: predicts {pred}, actual {act})"
        else:
            msg += f"differs from the derived one but holds on enumerated series {shown}"
        msg += f"; derived {format_relation(row.derived)} "
        msg += "fails on it too" if bad_der else "holds on it"
        row.warnings.append(msg)
    return row


def build_table(n_min: int, n_max: int) -> list[TableRow]:
    return [table_row(n) for n in range(n_min, n_max + 1)]
