from nablacomp.table import PUBLISHED, build_table, derived_relation, format_relation, violations


def test_format():
    assert format_relation((2, {1: 1, 0: 1})) == "f(i+2) = f(i+1) + f(i)"
    assert format_relation((6, {4: 5, 2: -6, 0: 1})) == "f(i+6) = 5 f(i+4) - 6 f(i+2) + f(i)"


def test_violations():
    fib = [1, 1, 2, 3, 5, 8]
    assert violations((2, {1: 1, 0: 1}), fib) == []
    assert violations((2, {0: 2}), fib) == [(2, 2, 3), (3, 4, 5), (4, 6, 8)]


def test_matching_rows():
    for n in (3, 4, 5, 6, 8, 9, 10):
        assert derived_relation(n) == PUBLISHED[n], n


def test_n7_divergence_flagged():
    (row,) = build_table(7, 7)
    assert row.matches is False
    assert row.derived == (4, {3: 1, 2: 3, 1: -2, 0: -1})
    assert row.oracle == (7, 13, 24, 45, 84, 158)
    assert row.derived_holds and not row.published_holds
    assert "predicts 84, actual 158" in row.warnings[0]


def test_unpublished_rows():
    rows = build_table(2, 12)
    assert [r.n for r in rows if r.published is None] == [2, 11, 12]
    assert all(not r.warnings for r in rows if r.n != 7)
