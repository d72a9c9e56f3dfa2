from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings

from linext.errors import TooLargeToSurvey
from linext.poset import antichain, chain, linear_sum
from linext.survey import (
    canonical_code,
    is_T_linear_sum,
    ordinal_summands,
    posets_up_to_iso,
    survey_small_posets,
)

from conftest import posets, random_poset


def test_class_counts():
    # unlabelled posets on 1..6 points
    assert [len(posets_up_to_iso(n)) for n in range(1, 7)] == [1, 2, 5, 16, 63, 318]


@settings(max_examples=60, deadline=None)
@given(posets(max_size=6))
def test_canonical_code_is_relabelling_invariant(p):
    order = list(range(p.size))
    random.Random(p.size).shuffle(order)
    assert canonical_code(p.permuted(order)) == canonical_code(p)


def test_canonical_code_against_full_minimum():
    # restricting to colour-respecting orders still separates classes at n = 4
    rng = random.Random(7)
    seen: dict = {}
    back: dict = {}
    for _ in range(200):
        p = random_poset(rng, 4, rng.choice([0.2, 0.4, 0.7]))
        full = min(
            tuple(p.permuted(perm).below) for perm in permutations(range(4))
        )
        code = canonical_code(p)
        assert seen.setdefault(full, code) == code
        assert back.setdefault(code, full) == full


def test_ordinal_summands(T):
    s = linear_sum(linear_sum(chain(1), T), T)
    parts = ordinal_summands(s)
    assert [q.size for q in parts] == [1, 3, 3]
    assert is_T_linear_sum(s)
    assert not is_T_linear_sum(antichain(2))
    assert not is_T_linear_sum(chain(3))


def test_survey_n2():
    r = survey_small_posets(2)
    assert r.min_delta == Fraction(1, 2)
    assert len(r.achievers) == 1


def test_survey_n3():
    r = survey_small_posets(3)
    assert r.min_delta == Fraction(1, 3)
    (only,) = r.achievers
    assert len(only.covers) == 1


def test_survey_n5():
    r = survey_small_posets(5)
    assert r.conjecture_holds and r.bound_holds
    assert r.min_delta == Fraction(1, 3)
    assert r.achievers_all_T_sums


def test_survey_limit():
    with pytest.raises(TooLargeToSurvey):
        survey_small_posets(8)


def test_survey_json_shape():
    data = survey_small_posets(3).to_json()
    assert data["min_delta"] == "1/3"
    assert data["sizes"][2] == {"n": 3, "posets": 5, "non_chains": 4, "min_delta": "1/3",
                                "achievers": 1}


def test_achiever_counts_match_compositions():
    # linear sums of T and singletons <-> compositions of n into 1s and 3s with a 3
    def compositions(n):
        return 1 if n == 0 else sum(compositions(n - p) for p in (1, 3) if p <= n)

    report = survey_small_posets(6)
    for s in report.sizes[2:]:
        assert len(s.achievers) == compositions(s.n) - 1
        assert all(is_T_linear_sum(p) for p in s.achievers)
