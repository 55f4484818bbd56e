"""Buchberger engine against the criterion-free oracle, plus dimension and
quotient machinery."""

import random
from fractions import Fraction

import pytest

from lctkit.groebner import (Budget, BudgetExceeded, Ideal, buchberger,
                             divide_exact, elimination_ideal, ideal_membership,
                             is_squarefree, krull_dimension,
                             local_dimension_at_origin, normal_form,
                             polynomial_gcd, quotient_basis)
from lctkit.polyring import GREVLEX, MonomialOrder, PolynomialRing

from oracles import membership_by_linear_algebra, naive_reduced_groebner


def random_poly(rng, ring, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = Fraction(rng.randint(-5, 5))
    return ring.polynomial(terms)


class TestBuchberger:
    def test_already_reduced(self):
        ring = PolynomialRing(["x", "y"])
        gb = buchberger([ring.parse("x"), ring.parse("y")])
        assert gb == [ring.parse("y"), ring.parse("x")]

    def test_monomial_normalization(self):
        ring = PolynomialRing(["x", "y"])
        gb = buchberger([ring.parse("2*x^2"), ring.parse("5*y^4")])
        assert gb == [ring.parse("x^2"), ring.parse("y^4")]

    def test_twisted_cubic_lex_matches_oracle(self):
        ring = PolynomialRing(["z", "y", "x"])
        gens = [ring.parse("y - x^2"), ring.parse("z - x^3")]
        lex = MonomialOrder.lex()
        assert buchberger(gens, lex) == naive_reduced_groebner(gens, lex)

    def test_random_ideals_match_oracle(self):
        rng = random.Random(17)
        ring = PolynomialRing(["x", "y"])
        for _ in range(15):
            gens = [random_poly(rng, ring) for _ in range(2)]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            assert buchberger(gens) == naive_reduced_groebner(gens)

    def test_shuffle_and_scale_invariance(self):
        rng = random.Random(23)
        ring = PolynomialRing(["x", "y", "z"])
        gens = [ring.parse("x*y - z"), ring.parse("y^2 + x"), ring.parse("x^2 - z^2")]
        reference = buchberger(gens)
        for _ in range(5):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            scaled = [g.scale(Fraction(rng.randint(1, 7), rng.randint(1, 5)))
                      for g in shuffled]
            assert buchberger(scaled) == reference

    def test_budget_raises(self):
        ring = PolynomialRing(["x", "y", "z"])
        gens = [ring.parse("x*y - z"), ring.parse("y*z - x"), ring.parse("x*z - y")]
        with pytest.raises(BudgetExceeded):
            buchberger(gens, budget=Budget(max_pairs=1))


class TestNormalForm:
    def test_quadric_euler_membership(self):
        ring = PolynomialRing(["x", "y", "z"])
        h = ring.parse("x^2+y^2+z^2")
        jac = Ideal([h.partial_derivative(i) for i in range(3)])
        assert ideal_membership(h, jac)

    def test_unit_not_member(self):
        ring = PolynomialRing(["x", "y"])
        ideal = Ideal([ring.parse("x"), ring.parse("y")])
        assert not ideal_membership(ring.one(), ideal)
        assert ideal.normal_form(ring.one()) == ring.one()

    def test_calderon_membership(self):
        ring = PolynomialRing(["x1", "x2", "x3"])
        h = ring.parse("x1*x2*(x1+x2)*(x1+x2*x3)")
        jac = Ideal([h.partial_derivative(i) for i in range(3)])
        assert ideal_membership(h, jac)

    def test_idempotent_and_linear(self):
        rng = random.Random(31)
        ring = PolynomialRing(["x", "y"])
        ideal = Ideal([ring.parse("x^2 - y"), ring.parse("y^2 - x")])
        gb = ideal.groebner_basis()
        for _ in range(20):
            f = random_poly(rng, ring)
            g = random_poly(rng, ring)
            nf_f = normal_form(f, gb)
            assert normal_form(nf_f, gb) == nf_f
            assert normal_form(f + g, gb) == nf_f + normal_form(g, gb)


class TestMembershipOracle:
    def test_fifty_random_ideals(self):
        rng = random.Random(41)
        checked = 0
        while checked < 50:
            nvars = rng.randint(1, 3)
            ring = PolynomialRing(["x", "y", "z"][:nvars])
            gens = [random_poly(rng, ring) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            ideal = Ideal(gens)
            if rng.random() < 0.5:
                # construct a member with small cofactors
                f = ring.zero()
                for g in gens:
                    f = f + g * random_poly(rng, ring, max_degree=2, max_terms=2)
            else:
                f = random_poly(rng, ring)
            member = ideal.contains(f) if not f.is_zero else True
            if f.is_zero:
                continue
            bound = max(f.total_degree(), 5) + 3
            brute = membership_by_linear_algebra(f, gens, bound)
            assert brute == member, (str(f), [str(g) for g in gens])
            checked += 1


class TestElimination:
    def test_rank_two_relation(self):
        ring = PolynomialRing(["x1", "x2", "xi1", "xi2", "lam"])
        ideal = Ideal([ring.parse("xi1 - 2*lam*x1"), ring.parse("xi2 - 2*lam*x2")])
        kept = elimination_ideal(ideal, ["x1", "x2", "xi1", "xi2"])
        assert [str(g) for g in kept.generators] == ["x2*xi1 - x1*xi2"]

    def test_substitution(self):
        ring = PolynomialRing(["x", "lam"])
        ideal = Ideal([ring.parse("lam - 1"), ring.parse("x - lam")])
        kept = elimination_ideal(ideal, ["x"])
        assert [str(g) for g in kept.generators] == ["x - 1"]

    def test_free_parameter_gives_zero_ideal(self):
        ring = PolynomialRing(["x", "xi", "lam"])
        ideal = Ideal([ring.parse("xi - lam")])
        kept = elimination_ideal(ideal, ["x", "xi"])
        assert kept.generators == ()


class TestDimension:
    def test_point(self):
        ring = PolynomialRing(["x1", "x2", "x3"])
        assert krull_dimension(Ideal([ring.variable(i) for i in range(3)])) == 0

    def test_coordinate_planes(self):
        ring = PolynomialRing(["x1", "x2", "xi1", "xi2"])
        ideal = Ideal([ring.parse("x1*xi1"), ring.parse("x2*xi2")])
        assert krull_dimension(ideal) == 2

    @pytest.mark.parametrize("n,p", [(2, 1), (2, 2), (3, 2), (3, 3), (4, 3)])
    def test_normal_crossing_symbols(self, n, p):
        names = [f"x{i}" for i in range(1, n + 1)] + [f"xi{i}" for i in range(1, n + 1)]
        ring = PolynomialRing(names)
        gens = [ring.variable(i) * ring.variable(n + i) for i in range(p)]
        gens += [ring.variable(n + j) for j in range(p, n)]
        assert krull_dimension(Ideal(gens)) == n

    def test_unit_ideal_errors(self):
        ring = PolynomialRing(["x"])
        with pytest.raises(ValueError):
            krull_dimension(Ideal([ring.one()]))


class TestQuotientBasis:
    def test_quadric(self):
        ring = PolynomialRing(["x", "y", "z"])
        h = ring.parse("x^2+y^2+z^2")
        qb = quotient_basis(Ideal([h.partial_derivative(i) for i in range(3)]))
        assert qb.monomials == ((0, 0, 0),)
        assert qb.dimension == 1

    def test_brieskorn(self):
        ring = PolynomialRing(["x", "y"])
        h = ring.parse("x^3+y^5")
        qb = quotient_basis(Ideal([h.partial_derivative(i) for i in range(2)]))
        assert qb.dimension == 8
        assert set(qb.monomials) == {(a, b) for a in range(2) for b in range(4)}

    def test_unit_ideal(self):
        ring = PolynomialRing(["x", "y"])
        qb = quotient_basis(Ideal([ring.one()]))
        assert qb.monomials == () and qb.dimension == 0

    def test_positive_dimensional_is_infinite(self):
        ring = PolynomialRing(["x", "y"])
        qb = quotient_basis(Ideal([ring.parse("x")]))
        assert not qb.finite

    def test_milnor_product_formula_on_corpus(self):
        from oracles import milnor_product_formula
        from whis_corpus import generate

        from lctkit.diagnostics import find_weights, jacobian_ideal

        for h in generate():
            weights = find_weights(h)
            expected = milnor_product_formula(weights.weights)
            assert expected.denominator == 1
            qb = quotient_basis(jacobian_ideal(h))
            assert qb.dimension == expected


class TestGcd:
    def test_exact_division(self):
        ring = PolynomialRing(["x", "y"])
        f = ring.parse("(x+y)^2*(x-y)")
        assert divide_exact(f, ring.parse("x+y")) == ring.parse("(x+y)*(x-y)")
        assert divide_exact(ring.parse("x^2+y"), ring.parse("x+y")) is None

    def test_gcd(self):
        ring = PolynomialRing(["x", "y"])
        g = polynomial_gcd(ring.parse("(x+y)^2*x"), ring.parse("(x+y)*y"))
        assert g == ring.parse("x+y")

    def test_squarefree(self):
        ring = PolynomialRing(["x", "y"])
        assert is_squarefree(ring.parse("x^2+y^2"))
        assert not is_squarefree(ring.parse("(x+y)^2"))
        assert is_squarefree(ring.parse("x^2*y + x*y^2 - x*y"))  # x*y*(x+y-1)
        assert not is_squarefree(ring.parse("x^2*y"))
        ring3 = PolynomialRing(["x1", "x2", "x3"])
        assert is_squarefree(ring3.parse("x1*x2*(x1+x2)*(x1+x2*x3)"))


class TestLocalDimension:
    def test_concentrated_at_origin(self):
        ring = PolynomialRing(["x", "y"])
        h = ring.parse("x^3+y^5")
        jac = Ideal([h.partial_derivative(i) for i in range(2)])
        assert local_dimension_at_origin(jac) == 8

    def test_extra_critical_points_split_off(self):
        # x^2 + y^2 + x^3 has a second critical point away from the divisor
        ring = PolynomialRing(["x", "y"])
        h = ring.parse("x^2+y^2+x^3")
        jac = Ideal([h.partial_derivative(i) for i in range(2)])
        assert quotient_basis(jac).dimension == 2
        assert local_dimension_at_origin(jac) == 1
