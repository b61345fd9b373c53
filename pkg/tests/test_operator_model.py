import pytest
from hypothesis import given, strategies as st

from nablacomp import DomainError, build_operator_set, composable


def test_n3_is_grad_curl_div():
    ops = build_operator_set(3)
    assert ops.signatures == ((0, 1), (1, 1), (1, 0))
    assert ops.m == 1


def test_n2_and_n4():
    assert build_operator_set(2).signatures == ((0, 1), (1, 0))
    assert build_operator_set(4).signatures == ((0, 1), (1, 2), (2, 1), (1, 0))


def test_n5_middle_operator():
    assert build_operator_set(5).signatures == ((0, 1), (1, 2), (2, 2), (2, 1), (1, 0))


@pytest.mark.parametrize("n", [1, 0, -3])
def test_rejects_small_n(n):
    with pytest.raises(DomainError):
        build_operator_set(n)


@pytest.mark.parametrize("i, j, expected", [(1, 2, True), (2, 1, False), (3, 1, True)])
def test_composable_n3(i, j, expected):
    assert composable(build_operator_set(3), i, j) is expected


@pytest.mark.parametrize("i, j", [(0, 1), (1, 4), (4, 4)])
def test_composable_index_range(i, j):
    with pytest.raises(DomainError):
        composable(build_operator_set(3), i, j)


@given(st.integers(2, 64))
def test_levels_in_range(n):
    ops = build_operator_set(n)
    assert len(ops.signatures) == n
    assert all(0 <= x <= ops.m for sig in ops.signatures for x in sig)
    assert ops.dom(1) == 0 and ops.cod(n) == 0


@given(st.integers(2, 64))
def test_self_composition(n):
    ops = build_operator_set(n)
    selfs = [i for i in range(1, n + 1) if composable(ops, i, i)]
    if n % 2:
        assert selfs == [n // 2 + 1]
    else:
        assert selfs == []
        assert composable(ops, n // 2, n // 2 + 1)
