import json

import pytest
from hypothesis import given, strategies as st

from largeness.errors import DomainError, ParseError, PreconditionError
from largeness.sets import (INTEGERS, NATURALS, Complement, ConstructionBacked, ExplicitSorted,
                            IntervalUnion, Window1D, descriptor_from_json, enumerate_window,
                            everything, gap_profile, iter_members, member, min_element,
                            multiples, normalize)

from strategies import descriptors, windows

IP_STAR_SQUARES = ConstructionBacked("ip_star", {"coeffs": [0, 1], "N": 1})


class TestMember:
    def test_listed_element(self):
        assert member(ExplicitSorted((2, 4, 6)), 4)

    def test_complement_of_listed_element(self):
        assert not member(Complement(ExplicitSorted((2, 4, 6))), 4)

    def test_construction_backed(self):
        assert member(IP_STAR_SQUARES, 42)
        assert not member(IP_STAR_SQUARES, 43)

    def test_outside_universe_is_domain_error(self):
        with pytest.raises(DomainError):
            member(ExplicitSorted((2, 4)), 0)
        with pytest.raises(DomainError):
            member(everything(), -5)
        assert member(everything(INTEGERS), -5)

    def test_in_operator_is_total(self):
        assert 0 not in everything()
        assert -3 not in Complement(ExplicitSorted(()))

    def test_exact_near_tower_scale(self):
        S = ConstructionBacked("ipn_star", {"coeffs": [0, 1], "beta": 1})
        t = 2 ** 256 + 2 ** 16 + 2 ** 4
        assert member(S, t * t + t)
        assert not member(S, t * t + t + 1)
        assert not member(S, t * t + t - 1)


class TestEnumerate:
    def test_filter(self):
        assert enumerate_window(ExplicitSorted((6, 20, 42, 72)), (10, 50)) == [20, 42]

    def test_complement(self):
        s = Complement(ExplicitSorted((6, 20)))
        assert enumerate_window(s, (1, 8)) == [1, 2, 3, 4, 5, 7, 8]

    def test_ip_star_squares(self):
        assert enumerate_window(IP_STAR_SQUARES, (1, 250)) == [6, 20, 42, 72, 110, 156, 210]

    def test_inverted_window(self):
        with pytest.raises(DomainError):
            enumerate_window(ExplicitSorted((1,)), (5, 4))
        with pytest.raises(DomainError):
            Window1D(3, 2)

    def test_naturals_window_must_start_at_one(self):
        with pytest.raises(DomainError):
            enumerate_window(ExplicitSorted((1,)), (0, 4))

    def test_index_cap_truncates(self):
        capped = ConstructionBacked("ip_star", {"coeffs": [0, 1], "N": 1, "index_cap": 3})
        xs = enumerate_window(capped, (1, 10 ** 6))
        assert len(xs) == 7 and xs[-1] == 14 * 14 + 14

    def test_wide_window_round_trip(self):
        s = Complement(IntervalUnion(((5, 900), (3000, 3100))), NATURALS)
        w = (1, 10_000)
        assert s.enumerate(w) == [x for x in range(1, 10_001) if member(s, x)]

    def test_iter_and_min(self):
        assert min_element(IP_STAR_SQUARES) == 6
        it = iter_members(IP_STAR_SQUARES, 100, chunk=16)
        assert [next(it) for _ in range(3)] == [110, 156, 210]
        assert min_element(ExplicitSorted(()), search_limit=2 ** 20) is None
        with pytest.raises(PreconditionError):
            min_element(everything(INTEGERS))


class TestGapProfile:
    def test_explicit(self):
        g = gap_profile(ExplicitSorted((6, 20, 42, 72)), (1, 100))
        assert g.gap_values == [14, 22, 30] and g.max_gap == 30 and g.status == "ok"

    def test_ip_star(self):
        g = gap_profile(IP_STAR_SQUARES, (1, 250))
        assert g.gap_values == [14, 22, 30, 38, 46, 54]

    def test_single_element(self):
        g = gap_profile(ExplicitSorted((5,)), (3, 7))
        assert g.status == "insufficient" and g.max_gap is None

    def test_empty(self):
        assert gap_profile(ExplicitSorted(()), (1, 9)).status == "empty"

    def test_truncation_flags(self):
        g = gap_profile(ExplicitSorted((3, 5, 9)), (1, 12))
        assert g.left_truncated and g.right_truncated
        g = gap_profile(ExplicitSorted((3, 5, 9)), (3, 9))
        assert not g.left_truncated and not g.right_truncated


class TestNormalize:
    def test_adjacent_merge(self):
        assert normalize(IntervalUnion(((1, 3), (4, 6)))).intervals == ((1, 6),)

    def test_sort(self):
        assert normalize(IntervalUnion(((5, 9), (1, 2)))).intervals == ((1, 2), (5, 9))

    def test_double_complement(self):
        x = ExplicitSorted((2, 4, 6))
        assert normalize(Complement(Complement(x))) == x


class TestJson:
    def test_integers_are_strings(self):
        obj = IntervalUnion(((1, 3),)).to_json()
        assert obj == {"variant": "interval_union", "universe": "naturals",
                       "intervals": [["1", "3"]]}

    @pytest.mark.parametrize("obj", [
        {"variant": "nope", "universe": "naturals"},
        {"variant": "explicit_sorted", "universe": "naturals", "elements": ["3", "1"]},
        {"variant": "explicit_sorted", "universe": "reals", "elements": []},
        {"variant": "interval_union", "universe": "naturals"},
        {"variant": "construction_backed", "universe": "naturals", "rule": "x", "params": {}},
    ])
    def test_malformed(self, obj):
        with pytest.raises(ParseError):
            descriptor_from_json(obj)

    def test_multiples(self):
        assert multiples(5, -7, 12, INTEGERS).elements == (-5, 0, 5, 10)
        assert multiples(3, 1, 10, offset=1).elements == (1, 4, 7, 10)


@given(st.data())
def test_round_trip_membership_matches_enumeration(data):
    s = data.draw(descriptors())
    lo, hi = data.draw(windows(s.universe))
    xs = s.enumerate((lo, hi))
    assert xs == sorted(set(xs))
    assert xs == [x for x in range(lo, hi + 1) if member(s, x)]


@given(st.data())
def test_complement_partitions_window(data):
    s = data.draw(descriptors())
    lo, hi = data.draw(windows(s.universe))
    a = s.enumerate((lo, hi))
    b = Complement(s, s.universe).enumerate((lo, hi))
    assert not set(a) & set(b)
    assert sorted(a + b) == list(range(lo, hi + 1))


@given(st.data())
def test_normalize_idempotent_and_membership_preserving(data):
    s = data.draw(descriptors())
    lo, hi = data.draw(windows(s.universe))
    n = normalize(s)
    assert normalize(n) == n
    assert n.enumerate((lo, hi)) == s.enumerate((lo, hi))


@given(descriptors())
def test_json_round_trip(s):
    text = json.dumps(s.to_json(), sort_keys=True)
    back = descriptor_from_json(json.loads(text))
    assert json.dumps(back.to_json(), sort_keys=True) == text
    lo = 1 if s.universe is NATURALS else -50
    assert back.enumerate((lo, lo + 300)) == s.enumerate((lo, lo + 300))
