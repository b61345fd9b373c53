"""Exit criteria, one test per criterion, each with its time budget."""
import time
from contextlib import contextmanager

import pytest

from nablacomp import (
    IntPolynomial,
    adjacency_matrix,
    build_operator_set,
    charpoly_determinant,
    charpoly_explicit,
    charpoly_recurrence,
    count_closed_form,
    count_enumerate,
    count_matrix,
    count_recurrence,
    edge_count,
    expected_power_pattern,
    fibonacci,
    matrix_power_direct,
    matrix_power_recurrent,
    reduced_recurrence_poly,
    semantic_adjacency,
)
from nablacomp.table import PUBLISHED, build_table, derived_relation, violations
from nablacomp.verify import random_matrices

P = IntPolynomial.from_high


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


@pytest.mark.criterion(1, "published characteristic polynomials P2..P5, all three methods")
def test_published_polynomials():
    expected = {
        2: P([1, 0, -1]),
        3: P([1, -1, -1, 0]),
        4: P([1, 0, -2, 0, 0]),
        5: P([1, -1, -2, 1, 0, 0]),
    }
    with budget(1):
        for n, p in expected.items():
            assert charpoly_explicit(n) == p
            assert charpoly_recurrence(n) == p
            assert charpoly_determinant(adjacency_matrix(n)) == p


@pytest.mark.criterion(2, "n=3 counts f(1..3) = 3, 5, 8 by every method")
def test_counting_anchors():
    with budget(1):
        for fn in (count_matrix, count_recurrence, count_enumerate, count_closed_form):
            assert [fn(3, k) for k in (1, 2, 3)] == [3, 5, 8], fn.__name__


@pytest.mark.criterion(3, "Fibonacci closed forms for n=3 and n=6, expansion identity")
def test_fibonacci_closed_forms():
    with budget(1):
        for k in range(1, 41):
            assert count_matrix(3, k) == fibonacci(k + 3)
            assert count_matrix(6, k) == 2 * fibonacci(k + 3)
        for k in range(1, 51):
            assert fibonacci(k - 3) + 4 * fibonacci(k - 2) + 4 * fibonacci(k - 1) == fibonacci(k + 3)


@pytest.mark.criterion(4, "displayed power patterns, n=3 k=1..20 and n=6 k=2..20")
def test_power_patterns():
    with budget(1):
        for n, start in ((3, 1), (6, 2)):
            a = adjacency_matrix(n)
            for k in range(start, 21):
                assert expected_power_pattern(n, k) == matrix_power_direct(a, k), (n, k)


@pytest.mark.criterion(5, "published recurrence table reproduced, n=7 divergence flagged")
def test_table_reproduction():
    with budget(1):
        for n in (3, 4, 5, 6, 8, 9, 10):
            assert derived_relation(n) == PUBLISHED[n], n
        derived7 = derived_relation(7)
        assert derived7 == (4, {3: 1, 2: 3, 1: -2, 0: -1})
        oracle = tuple(count_enumerate(7, k) for k in range(1, 7))
        assert oracle == (7, 13, 24, 45, 84, 158)
        assert violations(derived7, oracle) == []
        assert violations(PUBLISHED[7], oracle) != []
        (row,) = build_table(7, 7)
        assert row.matches is False and len(row.warnings) == 1


@pytest.mark.criterion(6, "triple-oracle agreement for counts, polynomials, matrix powers")
def test_triple_oracle_agreement():
    with budget(30):
        for n in range(2, 9):
            for k in range(1, 11):
                assert count_enumerate(n, k) == count_matrix(n, k) == count_recurrence(n, k)
        for n in range(2, 41):
            assert charpoly_explicit(n) == charpoly_recurrence(n) == charpoly_determinant(
                adjacency_matrix(n)
            )
        for n in range(2, 9):
            a = adjacency_matrix(n)
            for m in range(1, 21):
                assert matrix_power_recurrent(a, m) == matrix_power_direct(a, m)
        for a in random_matrices(10):
            for m in range(1, 13):
                assert matrix_power_recurrent(a, m) == matrix_power_direct(a, m)


@pytest.mark.criterion(7, "structural invariants of adjacency, counts and polynomials")
def test_structural_invariants():
    with budget(5):
        for n in range(2, 65):
            assert semantic_adjacency(build_operator_set(n)) == adjacency_matrix(n)
            assert count_matrix(n, 1) == n
            assert count_matrix(n, 2) == edge_count(adjacency_matrix(n))
            assert count_matrix(n, 2) == (2 * n - 2 if n % 2 == 0 else 2 * n - 1)
        for n in range(2, 41):
            p = charpoly_explicit(n)
            assert p.is_monic() and p.degree == n
            assert p.coeff(n - 1) == (0 if n % 2 == 0 else -1)


@pytest.mark.criterion(8, "count_matrix(10, 200) under 5 s, last window obeys both recurrences")
def test_scale():
    with budget(5):
        window = [count_matrix(10, k) for k in range(190, 201)]
        full = charpoly_explicit(10)
        # f(k) for k = 190..200 against the order-10 relation ending at k = 200
        assert sum(full.coeff(d) * window[d] for d in range(11)) == 0
        q, _ = reduced_recurrence_poly(full)
        tail = window[-(q.degree + 1):]
        assert sum(q.coeff(d) * tail[d] for d in range(q.degree + 1)) == 0
        assert window[-1] > 2**64
