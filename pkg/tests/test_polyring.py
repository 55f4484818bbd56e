"""Parser, arithmetic, orders, and grading."""

import random
from fractions import Fraction

import pytest

from lctkit.polyring import (GREVLEX, LEX, MonomialOrder, ParseError,
                             Polynomial, PolynomialRing, WeightSystem,
                             euler_apply, is_weighted_homogeneous,
                             parse_polynomial, weighted_degree)


def random_polynomial(rng, ring, max_degree=4, max_terms=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in range(ring.nvars))
        terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return ring.polynomial(terms)


class TestParser:
    def test_quadric(self):
        f = parse_polynomial("x^2+y^2+z^2", ["x", "y", "z"])
        assert f.term_map() == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}

    def test_zero(self):
        assert parse_polynomial("0", ["x"]).is_zero

    def test_product_expansion(self):
        # x1*x2*(x1+x2)*(x1+x2*x3) expands to four terms of top degree 5
        f = parse_polynomial("x1*x2*(x1+x2)*(x1+x2*x3)", ["x1", "x2", "x3"])
        assert f.term_map() == {
            (3, 1, 0): 1, (2, 2, 0): 1, (2, 2, 1): 1, (1, 3, 1): 1,
        }
        assert f.total_degree() == 5

    def test_rational_literals(self):
        f = parse_polynomial("1/2*x - 3/4", ["x"])
        assert f.coefficient((1,)) == Fraction(1, 2)
        assert f.coefficient((0,)) == Fraction(-3, 4)

    def test_power_of_parenthesized(self):
        f = parse_polynomial("(x+y)^3", ["x", "y"])
        assert f.coefficient((2, 1)) == 3

    def test_unary_minus(self):
        assert parse_polynomial("-x + -2", ["x"]) == parse_polynomial("-(x+2)", ["x"])

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("2x", ["x"])
        assert err.value.position == 1

    def test_unknown_variable(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("x + w", ["x", "y"])
        assert "w" in str(err.value)

    def test_division_by_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("x/2", ["x"])

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            parse_polynomial("(x + y", ["x", "y"])

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("x^-1", ["x"])

    def test_float_coefficients_rejected(self):
        ring = PolynomialRing(["x"])
        with pytest.raises(TypeError):
            ring.constant(0.5)

    def test_roundtrip_fixpoint(self):
        rng = random.Random(11)
        ring = PolynomialRing(["x", "y", "z"])
        for _ in range(40):
            f = random_polynomial(rng, ring)
            assert ring.parse(str(f)) == f


class TestArithmetic:
    def test_ring_axioms_random(self):
        rng = random.Random(5)
        ring = PolynomialRing(["x", "y", "z"])
        for _ in range(30):
            f = random_polynomial(rng, ring)
            g = random_polynomial(rng, ring)
            h = random_polynomial(rng, ring)
            assert (f + g) * h == f * h + g * h
            assert f * g == g * f
            assert f + (g + h) == (f + g) + h

    def test_leibniz_random(self):
        rng = random.Random(6)
        ring = PolynomialRing(["x", "y"])
        for _ in range(30):
            f = random_polynomial(rng, ring)
            g = random_polynomial(rng, ring)
            for i in range(2):
                left = (f * g).partial_derivative(i)
                right = f * g.partial_derivative(i) + g * f.partial_derivative(i)
                assert left == right

    def test_partial_derivative_examples(self):
        ring = PolynomialRing(["x", "y"])
        assert ring.parse("x^2+y^2").partial_derivative("x") == ring.parse("2*x")
        assert ring.parse("x^3+y^5").partial_derivative("y") == ring.parse("5*y^4")
        assert ring.parse("7").partial_derivative("x").is_zero

    def test_power(self):
        ring = PolynomialRing(["x"])
        x = ring.variable("x")
        assert (x + 1) ** 4 == ring.parse("x^4+4*x^3+6*x^2+4*x+1")

    def test_evaluate(self):
        f = parse_polynomial("x^2*y - 1/3", ["x", "y"])
        assert f.evaluate([Fraction(1, 2), Fraction(3)]) == Fraction(3, 4) - Fraction(1, 3)


class TestOrders:
    @pytest.fixture(params=["lex", "grevlex", "wgrevlex", "block"])
    def order(self, request):
        if request.param == "lex":
            return LEX
        if request.param == "grevlex":
            return GREVLEX
        if request.param == "wgrevlex":
            return MonomialOrder.weighted_grevlex([Fraction(1, 2), Fraction(1, 3), 1])
        return MonomialOrder.elimination([0, 1])

    def test_one_is_minimum(self, order):
        rng = random.Random(13)
        one = (0, 0, 0)
        for _ in range(60):
            m = tuple(rng.randint(0, 5) for _ in range(3))
            if m != one:
                assert order.key(m) > order.key(one)

    def test_multiplicative(self, order):
        rng = random.Random(14)
        for _ in range(80):
            a = tuple(rng.randint(0, 5) for _ in range(3))
            b = tuple(rng.randint(0, 5) for _ in range(3))
            c = tuple(rng.randint(0, 4) for _ in range(3))
            if order.key(a) < order.key(b):
                ca = tuple(x + y for x, y in zip(c, a))
                cb = tuple(x + y for x, y in zip(c, b))
                assert order.key(ca) < order.key(cb)

    def test_grevlex_tie_break(self):
        # same degree: the one with the smaller last exponent wins
        assert GREVLEX.key((1, 1, 0)) > GREVLEX.key((0, 1, 1))

    def test_elimination_blocks_dominate(self):
        order = MonomialOrder.elimination([2])
        # any power of the eliminated variable beats everything without it
        assert order.key((0, 0, 1)) > order.key((5, 5, 0))


class TestWeights:
    def test_weighted_degree_example(self):
        w = WeightSystem([Fraction(1, 2), Fraction(1, 2)])
        assert weighted_degree((2, 1), w) == Fraction(3, 2)

    def test_quadric_homogeneous(self):
        ring = PolynomialRing(["x", "y", "z"])
        w = WeightSystem([Fraction(1, 2)] * 3)
        h = ring.parse("x^2+y^2+z^2")
        assert is_weighted_homogeneous(h, w)
        assert euler_apply(h, w) == h

    def test_brieskorn_weights(self):
        ring = PolynomialRing(["x", "y"])
        w = WeightSystem([Fraction(1, 3), Fraction(1, 5)])
        h = ring.parse("x^3+y^5")
        assert is_weighted_homogeneous(h, w)
        assert euler_apply(h, w) == h

    def test_euler_inhomogeneous(self):
        ring = PolynomialRing(["x", "y"])
        w = WeightSystem([1, 1])
        assert euler_apply(ring.parse("x+y^2"), w) == ring.parse("x+2*y^2")

    def test_positive_weights_enforced(self):
        with pytest.raises(ValueError):
            WeightSystem([Fraction(1, 2), 0])

    def test_normalized(self):
        w = WeightSystem([1, 1], degree=2)
        assert w.normalized().weights == (Fraction(1, 2), Fraction(1, 2))
        assert w.normalized().degree == 1
