from __future__ import annotations

from fractions import Fraction

import pytest

from linext.analysis import (
    asymptotic_case_probabilities,
    case_counts_direct,
    case_decomposition,
    case_linear_sums,
    delta_sequence,
    tail_probability_limit_check,
)
from linext.engine import count_extensions
from linext.errors import OutOfRange
from linext.family import build_family, grid_count
from linext.quad import QuadNum, kappa, quad_sign

from conftest import delta_from_extensions

INV = Fraction(1, 6697)


def test_k2_t1_counts():
    dec = case_decomposition(2, 1)
    assert dec.counts == (69 * 69, 106 * 69, 143 * 37) == (4761, 7314, 5291)
    assert sum(dec.counts) == 17366 == dec.total
    assert sum(dec.probabilities) == 1


def test_k3_t1_total():
    dec = case_decomposition(3, 1)
    assert sum(dec.counts) == 2845162


def test_range_errors():
    for k, t in [(2, 0), (2, 2), (1, 1)]:
        with pytest.raises(OutOfRange):
            case_decomposition(k, t)


def test_partition_identity():
    for k in range(2, 7):
        for t in range(1, k):
            dec = case_decomposition(k, t)
            assert sum(dec.counts) == grid_count(5 * k, 5 * k)


def test_direct_counts_match_products():
    for k in range(2, 5):
        for t in range(1, k):
            assert case_counts_direct(k, t) == case_decomposition(k, t).counts


def test_linear_sum_shapes_count_the_same():
    for k, t in [(2, 1), (3, 1), (3, 2)]:
        sums = case_linear_sums(k, t)
        assert tuple(count_extensions(p) for p in sums) == case_counts_direct(k, t)


def test_dual_preserves_count():
    p = build_family(6, 4)
    assert count_extensions(p.dual()) == count_extensions(p)


def test_asymptotic_limits_match_stated_forms():
    p1, p2, p3 = asymptotic_case_probabilities()
    assert p1 == QuadNum(Fraction(1, 3), Fraction(-29, 6) * INV)
    assert p2 == QuadNum(Fraction(1, 6), Fraction(125, 6) * INV)
    assert p3 == QuadNum(Fraction(1, 2), Fraction(-16) * INV)
    assert p1 + p2 + p3 == 1
    assert [p.to_decimal(5) for p in (p1, p2, p3)] == ["0.27427", "0.42124", "0.30449"]


def test_finite_probabilities_approach_limits():
    limits = asymptotic_case_probabilities()
    dec = case_decomposition(6, 3)
    for finite, limit in zip(dec.probabilities, limits):
        assert quad_sign(abs(QuadNum(finite) - limit) - Fraction(1, 10**6)) < 0


def test_tail_probability():
    ratio, _ = tail_probability_limit_check(1)
    assert ratio == Fraction(69, 106)
    ratio, _ = tail_probability_limit_check(2)
    assert ratio == Fraction(11307, 17366)
    _, gap = tail_probability_limit_check(3)
    assert quad_sign(abs(gap) - Fraction(1, 10**8)) < 0


def test_tail_gap_shrinks():
    gaps = [abs(tail_probability_limit_check(k)[1]) for k in range(1, 8)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


def test_delta_sequence_k1_against_oracle():
    (row,) = delta_sequence(1)
    assert row.delta_exact == delta_from_extensions(build_family(5, 5))
    assert 106 % row.delta_exact.denominator == 0


def test_delta_sequence_properties():
    rows = delta_sequence(3)
    assert all(r.delta_exact >= Fraction(1, 3) for r in rows)
    gaps = [r.gap for r in rows]
    assert all(later <= earlier for earlier, later in zip(gaps, gaps[1:]))
    assert all(quad_sign(r.gap) >= 0 for r in rows)
    assert rows[0].gap == abs(QuadNum(rows[0].delta_exact) - kappa())


def test_delta_sequence_order_independent():
    forward = delta_sequence(3)
    backward = delta_sequence(3, reverse=True)
    assert [r.delta_exact for r in forward] == [r.delta_exact for r in backward]


def test_delta_regression_values():
    # produced by this implementation and frozen; cross-checked at k=1 by the oracle above
    rows = delta_sequence(2)
    assert [r.delta_exact for r in rows] == [Fraction(37, 106), Fraction(6059, 17366)]
    assert rows[0].witness == ("a1", "b1")
