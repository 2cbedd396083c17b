import itertools

import pytest
from hypothesis import given, strategies as st

from largeness.errors import BoundsError, PreconditionError
from largeness.families import (EXHAUSTED, FOUND, INCONCLUSIVE, block_witness_2d, delta_of,
                                delta_of_2d, find_delta_witness, find_ip_witness, fs_closure,
                                fs_closure_2d, pws_witness, replay, syndetic_max_gap, thick_run)
from largeness.fiber import BlockUnion, ExplicitPoints, FiberBacked, Rect
from largeness.sets import (INTEGERS, ConstructionBacked, ExplicitSorted, IntervalUnion,
                            everything, multiples)

EVENS = multiples(2, 1, 1000)
IP_STAR_SQUARES = ConstructionBacked("ip_star", {"coeffs": [0, 1], "N": 1})


class TestClosures:
    def test_fs_examples(self):
        assert fs_closure([1, 2, 4]) == [1, 2, 3, 4, 5, 6, 7]
        assert fs_closure([5]) == [5]
        assert fs_closure([2, 4, 8]) == [2, 4, 6, 8, 10, 12, 14]

    def test_fs_2d_examples(self):
        assert fs_closure_2d([(2, 2), (4, 4)]) == [(2, 2), (4, 4), (6, 6)]
        assert sorted(fs_closure_2d([(1, 0), (0, 1)])) == [(0, 1), (1, 0), (1, 1)]
        assert fs_closure_2d([(2, 2), (4, 4), (8, 8)]) == [(v, v) for v in range(2, 15, 2)]

    def test_fs_limits(self):
        with pytest.raises(PreconditionError):
            fs_closure([])
        with pytest.raises(BoundsError):
            fs_closure(list(range(1, 30)))

    def test_delta_examples(self):
        assert delta_of([1, 3, 7]) == [2, 4, 6]
        assert delta_of([1, 2, 3]) == [1, 2]
        assert delta_of([1, 4, 9, 16]) == [3, 5, 7, 8, 12, 15]
        assert delta_of_2d([(1, 1), (2, 2), (4, 4)]) == [(1, 1), (2, 2), (3, 3)]

    def test_delta_needs_increasing(self):
        with pytest.raises(PreconditionError):
            delta_of([3, 1])
        with pytest.raises(PreconditionError):
            delta_of([3])

    @given(st.lists(st.integers(1, 10 ** 6), min_size=1, max_size=10))
    def test_fs_size_and_replay(self, gens):
        sums = fs_closure(gens)
        assert len(sums) <= 2 ** len(gens) - 1
        every = {sum(c) for r in range(1, len(gens) + 1)
                 for c in itertools.combinations(gens, r)}
        assert set(sums) == every

    @given(st.lists(st.integers(1, 50), min_size=1, max_size=10))
    def test_fs_superincreasing_is_full(self, steps):
        gens, total = [], 0
        for s in steps:
            g = total + s
            gens.append(g)
            total += g
        assert len(fs_closure(gens)) == 2 ** len(gens) - 1

    @given(st.lists(st.integers(1, 1000), min_size=3, max_size=12, unique=True), st.data())
    def test_delta_prefix_monotone(self, xs, data):
        xs = sorted(xs)
        k = data.draw(st.integers(2, len(xs)))
        assert set(delta_of(xs[:k])) <= set(delta_of(xs))


class TestIpWitness:
    def test_naturals(self):
        rep = find_ip_witness(everything(), 3, 5)
        assert rep.verdict == FOUND and rep.witness == [1, 2, 3]
        assert replay(rep, everything())

    def test_small_explicit(self):
        assert find_ip_witness(ExplicitSorted((1, 2, 3)), 2, 3).witness == [1, 2]

    def test_odds_exhausted(self):
        odds = ExplicitSorted(tuple(range(1, 100, 2)))
        assert find_ip_witness(odds, 2, 99).verdict == EXHAUSTED

    def test_evens(self):
        assert find_ip_witness(EVENS, 2, 100).witness == [2, 4]

    def test_k1_is_nonemptiness(self):
        assert find_ip_witness(ExplicitSorted((7, 9)), 1, 8).witness == [7]
        assert find_ip_witness(ExplicitSorted((7, 9)), 1, 6).verdict == EXHAUSTED

    def test_budget(self):
        rep = find_ip_witness(ExplicitSorted(tuple(range(1, 100, 2))), 2, 99, budget=10)
        assert rep.verdict == INCONCLUSIVE

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv("LARGENESS_BUDGET", "5")
        rep = find_ip_witness(ExplicitSorted(tuple(range(1, 100, 2))), 2, 99)
        assert rep.verdict == INCONCLUSIVE


class TestDeltaWitness:
    def test_squares(self):
        squares = ExplicitSorted(tuple(i * i for i in range(1, 101)))
        rep = find_delta_witness(squares, 3, 30)
        # frozen from an exhaustive itertools scan over all triples in [1, 30]
        assert rep.witness == [1, 10, 26]
        assert replay(rep, squares)

    def test_evens(self):
        rep = find_delta_witness(ExplicitSorted(tuple(range(2, 101, 2))), 3, 20)
        # lexicographically first; (2, 4, 6) is a translate
        assert rep.witness == [1, 3, 5]
        assert delta_of([2, 4, 6]) == [2, 4]

    def test_singleton(self):
        assert find_delta_witness(ExplicitSorted((1,)), 2, 10).witness == [1, 2]
        assert find_delta_witness(ExplicitSorted((1,)), 3, 10).verdict == EXHAUSTED


class TestWindowed:
    def test_thick_run(self):
        rep = thick_run(IntervalUnion(((10, 20),)), 5, (1, 30))
        assert rep.witness == [10, 14]
        assert thick_run(EVENS, 2, (1, 1000)).verdict == EXHAUSTED

    def test_syndetic_gap(self):
        assert syndetic_max_gap(ExplicitSorted((3, 5, 9)), (3, 9)) == 4
        assert syndetic_max_gap(IntervalUnion(((1, 100),)), (1, 100)) == 1
        assert syndetic_max_gap(IP_STAR_SQUARES, (1, 250)) == 54
        assert syndetic_max_gap(ExplicitSorted((5,)), (1, 9)) is None

    def test_pws(self):
        rep = pws_witness(IntervalUnion(((50, 80),)), 1, 30, (1, 100))
        assert rep.witness == [50, 80]
        rep = pws_witness(EVENS, 2, 40, (1, 100))
        assert rep.found and replay(rep, EVENS)
        powers = ExplicitSorted(tuple(2 ** i for i in range(21)))
        assert pws_witness(powers, 3, 10, (1, 2 ** 20)).verdict == EXHAUSTED

    def test_block_2d(self):
        full = BlockUnion((Rect(1, 10, 0, 10),))
        rep = block_witness_2d(full, 3, (4, 9, 2, 8))
        assert rep.witness == [[4, 2]]
        checker = ExplicitPoints(frozenset((m, n) for m in range(1, 20) for n in range(20)
                                           if (m - n) % 2 == 0))
        assert block_witness_2d(checker, 2, (1, 19, 0, 19)).verdict == EXHAUSTED
        assert block_witness_2d(full, 30, (1, 10, 0, 10)).verdict == EXHAUSTED

    def test_block_2d_fiber_of_thick_set(self):
        A = IntervalUnion(((65536, 65552),))
        fiber = FiberBacked(A, ("n^2",))
        rep = block_witness_2d(fiber, 4, (65537, 65540, 0, 3))
        assert rep.witness == [[65537, 0]] and replay(rep, fiber)


@given(st.sets(st.integers(1, 60), max_size=30), st.integers(1, 3))
def test_ip_witnesses_replay(xs, k):
    s = ExplicitSorted(tuple(sorted(xs)))
    rep = find_ip_witness(s, k, 60)
    if rep.found:
        assert replay(rep, s) and len(rep.witness) == k


@given(st.sets(st.integers(1, 60), max_size=30), st.integers(2, 4))
def test_delta_witnesses_replay(xs, k):
    s = ExplicitSorted(tuple(sorted(xs)))
    rep = find_delta_witness(s, k, 60)
    if rep.found:
        assert replay(rep, s) and len(rep.witness) == k


@given(st.sets(st.integers(1, 200), max_size=120), st.integers(1, 8), st.integers(1, 20))
def test_thick_and_pws_witnesses_replay(xs, g, L):
    s = ExplicitSorted(tuple(sorted(xs)))
    for rep in (thick_run(s, L, (1, 200)), pws_witness(s, g, L, (1, 200))):
        if rep.found:
            assert replay(rep, s)


@given(st.sets(st.integers(1, 200), max_size=150), st.integers(1, 4), st.integers(1, 10))
def test_duality_spot_check(xs, G, L):
    # a long run of consecutive members is itself a piecewise syndetic witness
    s = ExplicitSorted(tuple(sorted(xs)))
    w = (1, 200)
    if all(not pws_witness(s, g, L, w).found for g in range(1, G + 1)):
        assert not thick_run(s, L * (G + 1), w).found


@given(st.sets(st.tuples(st.integers(1, 12), st.integers(0, 12)), max_size=120),
       st.integers(1, 4))
def test_block_witness_matches_brute_force(pts, L):
    plane = ExplicitPoints(frozenset(pts))
    rect = Rect(1, 12, 0, 12)
    rep = block_witness_2d(plane, L, rect)
    corners = [(m, n) for m in range(1, 14 - L) for n in range(0, 14 - L)
               if all((a, b) in pts for a in range(m, m + L) for b in range(n, n + L))]
    if corners:
        assert rep.witness == [list(corners[0])] and replay(rep, plane)
    else:
        assert rep.verdict == EXHAUSTED


def test_integers_universe_sets_work():
    s = multiples(3, -30, 30, INTEGERS)
    assert syndetic_max_gap(s, (-30, 30)) == 3
