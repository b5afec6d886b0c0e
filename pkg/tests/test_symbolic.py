"""Symbolic powers under asserted prime data, big height, Jacobian ideals."""

import random

import pytest

from froblab import (
    HypersurfaceRing,
    Ideal,
    Polynomial,
    big_height,
    ideal_equal,
    ideal_member,
    ideal_power,
    ideal_subset,
    jacobian_ideal,
    jacobian_power_product,
    make_ring,
    monomial_minimal_primes,
    parse_gens,
    parse_poly,
    primedata_for_squarefree,
    q_equal,
    q_ideal,
    q_member,
    q_power,
    q_subset,
    symbolic_power,
)
from froblab.symbolic import PrimeData, is_squarefree_monomial
from froblab.containment import xy_zk_setup


class TestPrimeData:
    def test_big_height_examples(self, F2xyz):
        def prime(gens):
            return Ideal(F2xyz, parse_gens(F2xyz, gens))

        pd = PrimeData(primes=(prime("x, y"), prime("x, z"), prime("y, z")))
        assert big_height(pd) == 2
        assert big_height(PrimeData(primes=(prime("x"),))) == 1
        assert big_height(PrimeData(primes=(prime("x, y"), prime("z")))) == 2

    def test_non_monomial_needs_metadata(self, F5xyz):
        P = Ideal(F5xyz, [parse_poly(F5xyz, "x + y^2")])
        with pytest.raises(ValueError, match="height metadata"):
            big_height(PrimeData(primes=(P,)))
        assert big_height(PrimeData(primes=(P,), heights=(1,))) == 1

    def test_separator_pattern_checked(self, F5xyz):
        x, y, z = (Polynomial.variable(F5xyz, v) for v in "xyz")
        P1 = Ideal(F5xyz, [x, y])
        P2 = Ideal(F5xyz, [x, z])
        good = PrimeData(primes=(P1, P2), separators=(z, y), asserted_radical=True)
        good.validate_separators()
        bad = PrimeData(primes=(P1, P2), separators=(x, y), asserted_radical=True)
        with pytest.raises(ValueError, match="its own prime"):
            bad.validate_separators()
        bad2 = PrimeData(primes=(P1, P2), separators=(z, z), asserted_radical=True)
        with pytest.raises(ValueError, match="membership pattern"):
            bad2.validate_separators()


class TestMinimalPrimes:
    def test_edge_triangle(self, F2xyz):
        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        covers = {
            tuple(sorted(g.lead_monomial().index(1) for g in P.gens))
            for P in monomial_minimal_primes(I)
        }
        assert covers == {(0, 1), (0, 2), (1, 2)}

    def test_principal_squarefree(self, F2xyz):
        I = Ideal(F2xyz, [parse_poly(F2xyz, "x*y")])
        covers = {
            tuple(sorted(g.lead_monomial().index(1) for g in P.gens))
            for P in monomial_minimal_primes(I)
        }
        assert covers == {(0,), (1,)}

    def test_rejects_non_squarefree(self, F2xyz):
        assert not is_squarefree_monomial(Ideal(F2xyz, [parse_poly(F2xyz, "x^2")]))
        with pytest.raises(ValueError):
            monomial_minimal_primes(Ideal(F2xyz, [parse_poly(F2xyz, "x^2")]))


class TestSymbolicPower:
    def test_edge_ideal_square(self, F2xyz):
        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        pd = primedata_for_squarefree(I)
        sym = symbolic_power(I, 2, pd)
        xyz = parse_poly(F2xyz, "x*y*z")
        assert ideal_member(xyz, sym)
        assert not ideal_member(xyz, ideal_power(I, 2))

    def test_strategies_agree_on_squarefree(self, F5xyz):
        I = Ideal(F5xyz, parse_gens(F5xyz, "x*y, x*z, y*z"))
        pd = primedata_for_squarefree(I)
        # separators: for prime (x,y) pick z-ish elements lying in the others
        x, y, z = (Polynomial.variable(F5xyz, v) for v in "xyz")
        by_prime = {
            tuple(sorted(g.lead_monomial().index(1) for g in P.gens)): P for P in pd.primes
        }
        ordered = [by_prime[k] for k in sorted(by_prime)]
        seps = {(0, 1): z, (0, 2): y, (1, 2): x}
        pd_sat = PrimeData(
            primes=tuple(ordered),
            separators=tuple(seps[k] for k in sorted(by_prime)),
            heights=(2, 2, 2),
            asserted_radical=True,
        )
        for n in (2, 3):
            combinatorial = symbolic_power(I, n, pd, strategy="monomial_combinatorial")
            intersected = symbolic_power(I, n, pd_sat, strategy="intersect_minimal_primes")
            assert ideal_equal(combinatorial, intersected)

    def test_prime_saturation_vs_monomial(self, F5xyz):
        # a single monomial prime: saturation and combinatorics agree
        P = Ideal(F5xyz, parse_gens(F5xyz, "x, z"))
        pd_sat = PrimeData(
            primes=(P,),
            separators=(Polynomial.variable(F5xyz, "y"),),
            heights=(2,),
            asserted_radical=True,
        )
        for n in (2, 3):
            sat = symbolic_power(P, n, pd_sat, strategy="saturate_by_separator")
            assert ideal_equal(sat, ideal_power(P, n))

    def test_ordinary_always_inside(self, F2xyz):
        rng = random.Random(3)
        from conftest import random_monomial_ideal

        for _ in range(8):
            I = random_monomial_ideal(F2xyz, rng, max_deg=1)
            if I.groebner_basis().is_unit() or not is_squarefree_monomial(I):
                continue
            pd = primedata_for_squarefree(I)
            for n in (1, 2, 3):
                sym = symbolic_power(I, n, pd)
                ok, _ = ideal_subset(ideal_power(I, n), sym)
                assert ok

    def test_radical_first_symbolic_is_identity(self, F2xyz):
        for gens in ("x*y, x*z, y*z", "x, y", "x*y"):
            I = Ideal(F2xyz, parse_gens(F2xyz, gens))
            pd = primedata_for_squarefree(I)
            assert ideal_equal(symbolic_power(I, 1, pd), I)

    def test_graded_family(self, F2xyz):
        from froblab import ideal_product

        I = Ideal(F2xyz, parse_gens(F2xyz, "x*y, x*z, y*z"))
        pd = primedata_for_squarefree(I)
        sym = {n: symbolic_power(I, n, pd) for n in (1, 2, 3, 4, 5, 6)}
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                ok, _ = ideal_subset(ideal_product(sym[a], sym[b]), sym[a + b])
                assert ok

    def test_hypersurface_symbolic_square(self):
        R, Q, pd = xy_zk_setup(5, 2)
        sym = symbolic_power(Q, 2, pd)
        assert q_equal(sym, q_ideal(R, [Polynomial.variable(R.ambient, "x")]))

    def test_embedded_requires_assertion(self, F5xyz):
        P = Ideal(F5xyz, parse_gens(F5xyz, "x, z"))
        pd = PrimeData(primes=(P,), separators=(Polynomial.variable(F5xyz, "y"),))
        with pytest.raises(ValueError, match="embedded"):
            symbolic_power(P, 2, pd)


class TestExample61Ladder:
    @pytest.mark.parametrize("p,k", [(5, 2), (7, 3)])
    def test_ladder(self, p, k):
        R, Q, pd = xy_zk_setup(p, k)
        x = Polynomial.variable(R.ambient, "x")
        for n in (1, 2):
            for r in range(k):
                sym = symbolic_power(Q, k * n + r, pd)
                assert q_member(x ** (n + r), sym)
                # strict exclusion from the same-index ordinary power
                if k * n + r >= 2:
                    assert not q_member(x ** (n + r), q_power(Q, k * n + r))


class TestJacobian:
    def test_quadric_cone(self):
        ring = make_ring(5, ["x", "y", "z"])
        R = HypersurfaceRing(ring, parse_poly(ring, "x*y - z^2"))
        J = jacobian_ideal(R)
        assert q_equal(J, q_ideal(R, parse_gens(ring, "x, y, z")))

    def test_cubic_cone(self):
        ring = make_ring(5, ["x", "y", "z"])
        R = HypersurfaceRing(ring, parse_poly(ring, "x*y - z^3"))
        J = jacobian_ideal(R)
        assert q_equal(J, q_ideal(R, parse_gens(ring, "x, y, z^2")))

    def test_frobenius_kernel_flagged(self, caplog):
        ring = make_ring(5, ["x"])
        R = HypersurfaceRing(ring, parse_poly(ring, "x^5"))
        import logging

        with caplog.at_level(logging.WARNING):
            J = jacobian_ideal(R)
        assert "non-reduced" in caplog.text
        assert ideal_equal(J.preimage, Ideal(ring, [parse_poly(ring, "x^5")]))

    def test_power_product(self):
        R, Q, pd = xy_zk_setup(5, 2)
        J = jacobian_ideal(R)
        sym = symbolic_power(Q, 2, pd)
        assert jacobian_power_product(J, 0, sym) is sym
        prod = jacobian_power_product(J, 1, sym)
        expected = Ideal(
            R.ambient, parse_gens(R.ambient, "x^2, x*y, x*z, x*y - z^2")
        )
        assert ideal_equal(prod.preimage, expected)

    def test_example61_repair_instance(self):
        # J^((k-1)n) Q^((kn)) inside Q^(kn) at k=2, n=1
        R, Q, pd = xy_zk_setup(5, 2)
        J = jacobian_ideal(R)
        sym = symbolic_power(Q, 2, pd)
        lhs = jacobian_power_product(J, 1, sym)
        ok, _ = q_subset(lhs, q_power(Q, 2))
        assert ok
