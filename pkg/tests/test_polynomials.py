import random

import pytest
from hypothesis import given, strategies as st

from largeness.errors import ParseError, PreconditionError
from largeness.polynomials import (IntPolynomial, Polynomial, choose_shift_exponent, derivative,
                                   eval_poly, monotone_threshold, parse_poly)


def P(s):
    return parse_poly(s)


class TestParse:
    @pytest.mark.parametrize("expr,coeffs", [
        ("n^2", (0, 1)),
        ("n^3-300n", (-300, 0, 1)),
        ("2n^2 - n", (-1, 2)),
        ("-n^2", (0, -1)),
        ("5*n^4 - 2n^2", (0, -2, 0, 5)),
        ("n", (1,)),
        ("n^2 + n^2", (0, 2)),
    ])
    def test_accepts_monomial_sums(self, expr, coeffs):
        assert parse_poly(expr).coeffs == coeffs

    @pytest.mark.parametrize("expr", ["n^2+1", "3", "", "x^2", "n^0", "n^-1", "n^2 - n^2",
                                      "n**2", "1.5n"])
    def test_rejects_everything_else(self, expr):
        with pytest.raises(ParseError):
            parse_poly(expr)

    def test_str_round_trips(self):
        for expr in ["n^3 - 300n", "-n^2", "2n^2 - n", "7n"]:
            assert parse_poly(str(parse_poly(expr))) == parse_poly(expr)

    def test_json_round_trip_keeps_huge_coefficients(self):
        p = IntPolynomial((3, -(2 ** 200), 1))
        obj = p.to_json()
        assert obj == {"coeffs": ["3", str(-(2 ** 200)), "1"]}
        assert IntPolynomial.from_json(obj) == p


class TestEval:
    def test_examples(self):
        assert eval_poly(P("n^2"), 3) == 9
        assert eval_poly(P("n^3 - 2n"), -2) == -4
        assert eval_poly(P("n^2"), 2 ** 16) == 4294967296

    def test_exact_at_tower_scale(self):
        x = 2 ** (2 ** 8)
        assert P("n^2")(x) == 2 ** 512
        assert P("n^3 - 300n")(x) == x ** 3 - 300 * x

    def test_naive_and_horner_agree_on_random_256_bit_inputs(self):
        rng = random.Random(7)
        for _ in range(1000):
            coeffs = tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(1, 6)))
            if coeffs[-1] == 0:
                continue
            p = IntPolynomial(coeffs)
            n = rng.randint(-(2 ** 256), 2 ** 256)
            naive = sum(c * n ** (i + 1) for i, c in enumerate(coeffs))
            assert p(n) == naive == eval_poly(p, n)


class TestDerivative:
    @pytest.mark.parametrize("expr,coeffs", [
        ("n^2", (0, 2)),
        ("n^3 + n", (1, 0, 3)),
        ("5n^4 - 2n^2", (0, -4, 0, 20)),
    ])
    def test_examples(self, expr, coeffs):
        assert derivative(P(expr)) == Polynomial(coeffs)

    @given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=6),
           st.lists(st.integers(-1000, 1000), min_size=1, max_size=6))
    def test_linear(self, a, b):
        pa, pb = Polynomial((0, *a)), Polynomial((0, *b))
        assert (pa + pb).derivative() == pa.derivative() + pb.derivative()


class TestMonotone:
    @pytest.mark.parametrize("expr,M", [("n^2", 0), ("n^2 - 4n", 2), ("n^3 - 300n", 10)])
    def test_threshold_examples(self, expr, M):
        assert monotone_threshold(P(expr)) == M

    @pytest.mark.parametrize("expr,N", [("n^2", 1), ("n^3 - 300n", 4), ("2n^2 - n", 1)])
    def test_shift_exponent_examples(self, expr, N):
        assert choose_shift_exponent(P(expr)) == N

    def test_negative_lead_rejected(self):
        with pytest.raises(PreconditionError):
            monotone_threshold(P("-n^2"))

    @given(st.lists(st.integers(-50, 50), min_size=0, max_size=4), st.integers(1, 5))
    def test_strictly_increasing_from_threshold(self, low, lead):
        p = IntPolynomial((*low, lead))
        M = monotone_threshold(p)
        assert all(p(n + 1) > p(n) for n in range(M, M + 200))
        # threshold is tight: the step into M is not an increase
        if M > 0:
            assert p(M) <= p(M - 1)

    @given(st.lists(st.integers(-50, 50), min_size=0, max_size=4), st.integers(1, 5))
    def test_shift_exponent_is_smallest(self, low, lead):
        p = IntPolynomial((*low, lead))
        N, M = choose_shift_exponent(p), monotone_threshold(p)
        assert N >= 1 and 2 ** N >= M
        assert N == 1 or 2 ** (N - 1) < M
