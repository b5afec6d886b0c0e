import random

import pytest

from froblab import Ideal, Polynomial, make_ring


@pytest.fixture
def F5xyz():
    return make_ring(5, ["x", "y", "z"])


@pytest.fixture
def F2xyz():
    return make_ring(2, ["x", "y", "z"])


def random_poly(ring, rng, max_deg=3, max_terms=4, nonzero=False):
    """Small random polynomial; used by the seeded property loops."""
    while True:
        terms = []
        for _ in range(rng.randrange(0 if not nonzero else 1, max_terms + 1)):
            m = [0] * ring.nvars
            for _ in range(rng.randrange(0, max_deg + 1)):
                m[rng.randrange(ring.nvars)] += 1
            terms.append((tuple(m), rng.randrange(1, ring.p)))
        f = Polynomial(ring, terms)
        if f or not nonzero:
            return f


def random_ideal(ring, rng, max_gens=3, max_deg=3, max_terms=3):
    gens = [
        random_poly(ring, rng, max_deg=max_deg, max_terms=max_terms, nonzero=True)
        for _ in range(rng.randrange(1, max_gens + 1))
    ]
    return Ideal(ring, gens)


def random_monomial_ideal(ring, rng, max_gens=3, max_deg=3):
    gens = []
    for _ in range(rng.randrange(1, max_gens + 1)):
        m = [0] * ring.nvars
        for _ in range(rng.randrange(1, max_deg + 1)):
            m[rng.randrange(ring.nvars)] += 1
        gens.append(Polynomial.monomial(ring, tuple(m)))
    return Ideal(ring, gens)
