"""Ideal algebra: sums/products/powers, bracket powers, intersection, colon,
saturation, elimination, minors, and the oracle's own contract."""

import random

import pytest

from froblab import (
    Ideal,
    PolyMatrix,
    Polynomial,
    bracket_power,
    brute_membership_oracle,
    eliminate,
    format_poly,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_power,
    ideal_product,
    ideal_subset,
    ideal_sum,
    make_ring,
    minors,
    monomial_intersect,
    parse_gens,
    parse_poly,
    poly_divide_exact,
    saturate,
)
from froblab.idealops import monomials_up_to
from conftest import random_ideal, random_monomial_ideal, random_poly


class TestSumProductPower:
    def test_product_principal(self, F5xyz):
        x, y = Polynomial.variable(F5xyz, "x"), Polynomial.variable(F5xyz, "y")
        P = ideal_product(Ideal(F5xyz, [x]), Ideal(F5xyz, [y]))
        assert ideal_equal(P, Ideal(F5xyz, [x * y]))

    def test_square_of_two_gens(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x, z"))
        sq = ideal_power(I, 2)
        assert {format_poly(g) for g in sq.gens} == {"x^2", "x*z", "z^2"}

    def test_zeroth_power_is_unit(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x, y"))
        assert ideal_power(I, 0).groebner_basis().is_unit()


class TestBracketPower:
    def test_monomial(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x, y"))
        assert {format_poly(g) for g in bracket_power(I, 1).gens} == {"x^5", "y^5"}

    def test_char_p_identity(self, F5xyz):
        I = Ideal(F5xyz, [parse_poly(F5xyz, "x + y")])
        assert format_poly(bracket_power(I, 1).gens[0]) == "x^5 + y^5"

    def test_squarefree_f2(self, F2xyz):
        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        assert {format_poly(g) for g in bracket_power(I, 1).gens} == {
            "x^2*y^2", "x^2*z^2", "y^2*z^2",
        }

    def test_generator_independence(self):
        # a second generating set (random combinations added) gives the same bracket
        rng = random.Random(17)
        for trial in range(12):
            ring = make_ring([2, 3, 5][trial % 3], ["x", "y"])
            I = random_ideal(ring, rng, max_gens=2)
            extra = Polynomial.zero(ring)
            for g in I.gens:
                extra = extra + random_poly(ring, rng, max_deg=2, max_terms=2) * g
            J = Ideal(ring, I.gens + (extra,))
            assert ideal_equal(bracket_power(I, 1), bracket_power(J, 1))

    def test_distributes_over_sum_and_product(self):
        rng = random.Random(29)
        ring = make_ring(3, ["x", "y"])
        for _ in range(10):
            I, J = random_ideal(ring, rng), random_ideal(ring, rng)
            assert ideal_equal(
                bracket_power(ideal_sum(I, J), 1),
                ideal_sum(bracket_power(I, 1), bracket_power(J, 1)),
            )
            assert ideal_equal(
                bracket_power(ideal_product(I, J), 1),
                ideal_product(bracket_power(I, 1), bracket_power(J, 1)),
            )

    def test_bracket_inside_ordinary_power(self):
        rng = random.Random(41)
        for p in (2, 3):
            ring = make_ring(p, ["x", "y"])
            for _ in range(6):
                I = random_ideal(ring, rng, max_gens=2, max_deg=2)
                ok, _ = ideal_subset(bracket_power(I, 1), ideal_power(I, p))
                assert ok

    def test_pigeonhole(self):
        # I^(Nq-h+1) <= (I^(N-(h-1)))^[q] for h-generated monomial ideals
        rng = random.Random(53)
        for p in (2, 3, 5):
            ring = make_ring(p, ["x", "y", "z"])
            for _ in range(6):
                I = random_monomial_ideal(ring, rng, max_gens=3, max_deg=2)
                h = len(I.gens)
                for N in range(h, 4):
                    lhs = ideal_power(I, N * p - h + 1)
                    rhs = bracket_power(ideal_power(I, N - (h - 1)), 1)
                    ok, wit = ideal_subset(lhs, rhs)
                    assert ok, (p, [str(g) for g in I.gens], N, str(wit))


class TestIntersect:
    def test_principal(self, F5xyz):
        x, y = Polynomial.variable(F5xyz, "x"), Polynomial.variable(F5xyz, "y")
        assert ideal_equal(
            ideal_intersect(Ideal(F5xyz, [x]), Ideal(F5xyz, [y])),
            Ideal(F5xyz, [x * y]),
        )

    def test_with_unit(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x, y"))
        assert ideal_equal(ideal_intersect(I, Ideal.unit(F5xyz)), I)

    def test_triple_squarefree(self, F2xyz):
        A = ideal_power(Ideal(F2xyz, parse_gens(F2xyz, "x, y")), 2)
        B = ideal_power(Ideal(F2xyz, parse_gens(F2xyz, "x, z")), 2)
        C = ideal_power(Ideal(F2xyz, parse_gens(F2xyz, "y, z")), 2)
        meet = ideal_intersect(ideal_intersect(A, B), C)
        assert ideal_member(parse_poly(F2xyz, "x*y*z"), meet)
        assert not ideal_member(parse_poly(F2xyz, "x^2*y"), meet)

    def test_agrees_with_lcm_oracle(self):
        rng = random.Random(61)
        for p in (2, 5):
            ring = make_ring(p, ["x", "y", "z"])
            for _ in range(10):
                I = random_monomial_ideal(ring, rng)
                J = random_monomial_ideal(ring, rng)
                assert ideal_equal(ideal_intersect(I, J), monomial_intersect(I, J))


class TestColon:
    def test_monomial_forced(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x^2, x*y"))
        x = Polynomial.variable(F5xyz, "x")
        assert ideal_equal(ideal_colon(I, x), Ideal(F5xyz, parse_gens(F5xyz, "x, y")))

    def test_by_ideal(self):
        r = make_ring(5, ["x", "y"])
        I = Ideal(r, [parse_poly(r, "x*y")])
        J = Ideal(r, parse_gens(r, "x, y"))
        assert ideal_equal(ideal_colon(I, J), I)

    def test_f2_colon_contains_xyz(self, F2xyz):
        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        colon = ideal_colon(bracket_power(I, 1), I)
        xyz = parse_poly(F2xyz, "x*y*z")
        assert ideal_member(xyz, colon)
        # oracle check: xyz*(each generator) lands in the bracket power
        for g in I.gens:
            assert brute_membership_oracle(xyz * g, bracket_power(I, 1), 3)

    def test_colon_times_ideal_inside(self):
        rng = random.Random(71)
        ring = make_ring(3, ["x", "y", "z"])
        for _ in range(12):
            I, J = random_ideal(ring, rng), random_ideal(ring, rng)
            C = ideal_colon(I, J)
            ok, _ = ideal_subset(ideal_product(C, J), I)
            assert ok

    def test_colon_is_largest_on_monomial_cases(self):
        # brute-force largest-ness: every monomial t of degree <= 3 with tJ <= I
        # must lie in (I : J)
        rng = random.Random(73)
        ring = make_ring(2, ["x", "y", "z"])
        for _ in range(8):
            I = random_monomial_ideal(ring, rng)
            J = random_monomial_ideal(ring, rng)
            C = ideal_colon(I, J)
            for m in monomials_up_to(ring, 3):
                t = Polynomial.monomial(ring, m)
                sends_in = all(ideal_member(t * g, I) for g in J.gens)
                assert sends_in == ideal_member(t, C)

    def test_exact_division_guard(self, F5xyz):
        with pytest.raises(ArithmeticError):
            poly_divide_exact(
                parse_poly(F5xyz, "x^2 + y"), parse_poly(F5xyz, "x")
            )


class TestSaturate:
    def test_monomial_chain(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x*y, x*z"))
        sat, s = saturate(I, Polynomial.variable(F5xyz, "y"))
        assert ideal_equal(sat, Ideal(F5xyz, [Polynomial.variable(F5xyz, "x")]))
        assert s == 1

    def test_forced_two_step_chain(self, F5xyz):
        x = Polynomial.variable(F5xyz, "x")
        sat, s = saturate(Ideal(F5xyz, [x**2]), x)
        assert sat.groebner_basis().is_unit()
        assert s == 2

    def test_contains_input_and_idempotent(self):
        rng = random.Random(83)
        ring = make_ring(5, ["x", "y", "z"])
        for _ in range(8):
            I = random_ideal(ring, rng)
            f = random_poly(ring, rng, max_deg=2, max_terms=2, nonzero=True)
            sat, _ = saturate(I, f)
            ok, _ = ideal_subset(I, sat)
            assert ok
            again, s2 = saturate(sat, f)
            assert ideal_equal(again, sat) and s2 == 0

    def test_fast_path_matches_iterated_colon(self):
        # homogeneous + grevlex + trailing variable: both routes agree
        rng = random.Random(89)
        ring = make_ring(5, ["x", "y", "z"])
        z = Polynomial.variable(ring, "z")
        for _ in range(10):
            gens = []
            for _ in range(rng.randrange(1, 4)):
                d = rng.randrange(1, 4)
                terms = []
                for m in monomials_up_to(ring, d):
                    if sum(m) == d and rng.random() < 0.4:
                        terms.append((m, rng.randrange(1, 5)))
                if terms:
                    gens.append(Polynomial(ring, terms))
            if not gens:
                continue
            I = Ideal(ring, gens)
            fast, s_fast = saturate(I, z, fast=True)
            slow, s_slow = saturate(I, z, fast=False)
            assert ideal_equal(fast, slow)
            assert s_fast == s_slow

    def test_saturation_by_ideal(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x*y, x*z"))
        m = Ideal(F5xyz, parse_gens(F5xyz, "y, z"))
        sat, _ = saturate(I, m)
        assert ideal_equal(sat, Ideal(F5xyz, [Polynomial.variable(F5xyz, "x")]))


class TestEliminate:
    def test_intersection_construction(self):
        r = make_ring(5, ["t", "x", "y"])
        I = Ideal(r, parse_gens(r, "t*x, y - t*y"))
        E = eliminate(I, ["t"])
        assert ideal_member(parse_poly(r, "x*y"), E)

    def test_parametrized_parabola(self):
        r = make_ring(5, ["t", "x", "y"])
        I = Ideal(r, parse_gens(r, "x - t, y - t^2"))
        E = eliminate(I, ["t"])
        assert ideal_equal(E, Ideal(r, [parse_poly(r, "y - x^2")]))

    def test_noop_variable(self, F5xyz):
        I = Ideal(F5xyz, [Polynomial.variable(F5xyz, "x")])
        assert ideal_equal(eliminate(I, ["y"]), I)

    def test_cannot_eliminate_everything(self, F5xyz):
        I = Ideal(F5xyz, [Polynomial.variable(F5xyz, "x")])
        with pytest.raises(ValueError, match="every variable"):
            eliminate(I, ["x", "y", "z"])

    def test_unknown_variable_rejected(self, F5xyz):
        I = Ideal(F5xyz, [Polynomial.variable(F5xyz, "x")])
        with pytest.raises(ValueError, match="unknown variable"):
            eliminate(I, ["w"])


class TestMinors:
    def test_1x1(self, F5xyz):
        M = PolyMatrix(F5xyz, [parse_gens(F5xyz, "x, y")])
        assert ideal_equal(minors(M, 1), Ideal(F5xyz, parse_gens(F5xyz, "x, y")))

    def test_2x3_cyclic(self, F5xyz):
        M = PolyMatrix(F5xyz, [parse_gens(F5xyz, "x, y, z"), parse_gens(F5xyz, "y, z, x")])
        I = minors(M, 2)
        expected = Ideal(
            F5xyz, parse_gens(F5xyz, "x*z - y^2, x^2 - y*z, y*x - z^2")
        )
        assert ideal_equal(I, expected)

    def test_zero_matrix(self, F5xyz):
        zero = Polynomial.zero(F5xyz)
        M = PolyMatrix(F5xyz, [[zero] * 3, [zero] * 3])
        assert minors(M, 2).is_zero()


class TestBruteOracle:
    def test_trivial_cases(self):
        r = make_ring(5, ["x", "y"])
        x = Polynomial.variable(r, "x")
        assert brute_membership_oracle(x**2, Ideal(r, [x]), 1)
        assert not brute_membership_oracle(
            Polynomial.one(r), Ideal(r, parse_gens(r, "x, y")), 5
        )

    def test_degree_bound_semantics(self, F2xyz):
        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        xyz = parse_poly(F2xyz, "x*y*z")
        assert not brute_membership_oracle(xyz, ideal_power(I, 2), 3)
