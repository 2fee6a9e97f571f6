from fractions import Fraction

import pytest

from qternary.density import (
    DensityReport,
    loeschian_density,
    nonzero_density,
    render_ratio,
    running_upper_density,
    three_squares_density,
)
from qternary.genfun import CoefficientTable, b_table, bbar_table
from qternary.ternary import TernaryForm, representation_counts


def test_b_small():
    r = nonzero_density(b_table(6), [6])
    assert r.counts == (4,) and r.ratios == (Fraction(4, 6),)
    assert r.rows() == [("6", "4", "0.666667")]


def test_bbar_small():
    assert nonzero_density(bbar_table(6), [6]).counts == (4,)


def test_zero_table():
    t = CoefficientTable("B", (1,) + (0,) * 50)
    assert nonzero_density(t, [10, 50]).ratios == (0, 0)


def test_beyond_table():
    with pytest.raises(IndexError):
        nonzero_density(b_table(6), [7])


def test_three_squares():
    r = three_squares_density([1, 1000])
    assert r.counts == (1, 835)


def test_three_squares_tiers_by_hand():
    # 4^a (8b + 7) <= 1000: 125 + 31 + 7 + 2 values for a = 0..3
    tiers = [len(range(7 * 4**a, 1001, 8 * 4**a)) for a in range(5)]
    assert tiers == [125, 31, 7, 2, 0]
    assert 1000 - sum(tiers) == 835


def test_three_squares_against_search():
    counts = representation_counts(TernaryForm(1, 1, 1), 3000)
    r = three_squares_density([10, 100, 3000])
    for X, c in zip(r.checkpoints, r.counts):
        assert c == sum(1 for n in range(1, X + 1) if counts[n] > 0)


def test_loeschian():
    assert loeschian_density([20]).counts == (9,)
    r = loeschian_density([10**3, 10**4, 10**5])
    assert r.ratios[0] > r.ratios[1] > r.ratios[2]


def test_report_invariants():
    r = nonzero_density(b_table(500), [10, 100, 250, 500])
    assert list(r.counts) == sorted(r.counts)
    assert all(0 <= x <= 1 for x in r.ratios)
    with pytest.raises(ValueError):
        DensityReport("x", (10, 5), (1, 1))


def test_render():
    assert render_ratio(Fraction(5, 6)) == "0.833333"
    assert render_ratio(Fraction(1, 1)) == "1.000000"
    assert render_ratio(Fraction(0, 7)) == "0.000000"


def test_running_upper_trivial():
    ones = CoefficientTable("B", (1,) * 1001)
    zeros = CoefficientTable("B", (1,) + (0,) * 1000)
    assert all(v == 1 for _, v in running_upper_density(ones))
    assert all(v == 0 for _, v in running_upper_density(zeros))
    assert [x for x, _ in running_upper_density(ones)] == [1, 10, 100, 1000]


def test_running_upper_brute():
    t = b_table(3000)
    nz = [v != 0 for v in t.values]
    counts = [sum(nz[1 : x + 1]) for x in range(len(nz))]
    for X, v in running_upper_density(t):
        expected = max(Fraction(counts[x], x) for x in range(X, 3001))
        assert v == expected


def test_running_upper_b_table():
    vals = [v for _, v in running_upper_density(b_table(10**4))]
    assert all(0 <= v <= 1 for v in vals)
    assert all(a >= b for a, b in zip(vals, vals[1:]))
