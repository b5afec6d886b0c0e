"""Symbolic powers relative to registry-supplied prime data, big-height
bookkeeping, and Jacobian ideals of hypersurfaces.

Symbolic powers are never computed from a primary decomposition: the prime
structure is asserted by the example author and only its checkable
consequences (separator membership patterns, monomial minimal covers) are
verified here. Three strategies:

  * monomial_combinatorial — squarefree monomial ideals; intersect the n-th
    powers of the minimal covers by pairwise lcm.
  * saturate_by_separator — a single listed prime; saturate the ordinary power
    by a separator lying in every other listed associated prime.
  * intersect_minimal_primes — radical unmixed ideals; intersect the per-prime
    saturations.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .groebner import Ideal, ideal_member, ideal_subset
from .idealops import (
    ideal_power,
    is_monomial_ideal,
    monomial_min_gens,
    saturate,
)
from .quotient import HypersurfaceRing, QuotientIdeal, q_member, q_power, q_product
from .rings import Polynomial, mono_lcm

log = logging.getLogger(__name__)

STRATEGIES = ("saturate_by_separator", "intersect_minimal_primes", "monomial_combinatorial")


@dataclass
class PrimeData:
    """Asserted associated-prime data for one ideal.

    primes are the minimal primes (Ideal or QuotientIdeal); separators[i] must
    lie in every other listed prime and every listed power_embedded prime but
    not in primes[i] — that membership pattern is checked, the primality and
    the completeness of the list are the author's assertion. heights are
    registry-supplied except for monomial primes, where height = number of
    generating variables. max_local_gens carries the largest minimal number of
    generators of the ideal after localizing at a listed prime.
    """

    primes: tuple
    separators: tuple | None = None
    heights: tuple | None = None
    max_local_gens: int | None = None
    power_embedded: tuple = ()
    asserted_radical: bool = False
    asserted_finite_pd: bool = False
    asserted_fpure_quotient: bool = False
    asserted_sfr_quotient: bool = False
    checked: dict = field(default_factory=dict)

    def __post_init__(self):
        self.primes = tuple(self.primes)
        if self.separators is not None:
            self.separators = tuple(self.separators)
        if self.heights is not None:
            self.heights = tuple(self.heights)
        self.power_embedded = tuple(self.power_embedded)

    def validate_separators(self, budget=None):
        """Check the separator membership pattern; raises on violation."""
        if self.separators is None:
            raise ValueError("prime data has no separators")
        if len(self.separators) != len(self.primes):
            raise ValueError("one separator per listed prime is required")
        for i, s in enumerate(self.separators):
            for j, P in enumerate(self.primes):
                inside = _member(s, P, budget)
                if i == j and inside:
                    raise ValueError(f"separator {s} lies in its own prime")
                if i != j and not inside:
                    raise ValueError(
                        f"separator {s} misses listed prime #{j}; membership pattern violated"
                    )
            for E in self.power_embedded:
                if not _member(s, E, budget):
                    raise ValueError(
                        f"separator {s} misses a listed embedded prime"
                    )
        self.checked["separators"] = True


def _member(f, P, budget=None):
    if isinstance(P, QuotientIdeal):
        return q_member(f, P, budget)
    return ideal_member(f, P, budget)


def _prime_height(P):
    """Computable only for monomial primes: the number of generating variables."""
    gens = P.named_gens if isinstance(P, QuotientIdeal) else P.gens
    names = set()
    for g in gens:
        if not g.is_monomial():
            return None
        m = g.lead_monomial()
        if sum(m) != 1:
            return None
        names.add(m.index(1))
    return len(names)


def big_height(pd: PrimeData) -> int:
    """Max height over the listed primes; monomial heights are computed."""
    if not pd.primes:
        raise ValueError("prime data lists no primes")
    heights = []
    for i, P in enumerate(pd.primes):
        if pd.heights is not None and i < len(pd.heights) and pd.heights[i] is not None:
            heights.append(pd.heights[i])
            continue
        h = _prime_height(P)
        if h is None:
            raise ValueError("missing height metadata for a non-monomial prime")
        heights.append(h)
    return max(heights)


# ---------------------------------------------------------------------------
# squarefree monomial combinatorics
# ---------------------------------------------------------------------------


def is_squarefree_monomial(I: Ideal) -> bool:
    return bool(I.gens) and all(
        g.is_monomial() and max(g.lead_monomial()) <= 1 for g in I.gens
    )


def monomial_minimal_primes(I: Ideal):
    """Minimal vertex covers of the generator supports, as variable ideals."""
    if not is_squarefree_monomial(I):
        raise ValueError("minimal primes are only computed for squarefree monomial ideals")
    ring = I.ring
    supports = [frozenset(i for i, e in enumerate(g.lead_monomial()) if e) for g in I.gens]
    used = sorted(set().union(*supports))
    covers = []
    for size in range(1, len(used) + 1):
        for combo in itertools.combinations(used, size):
            cset = set(combo)
            if not all(s & cset for s in supports):
                continue
            if any(set(c) <= cset for c in covers):
                continue
            covers.append(combo)
    primes = [
        Ideal(ring, [Polynomial.variable(ring, ring.variables[i]) for i in combo])
        for combo in covers
    ]
    return primes


def primedata_for_squarefree(I: Ideal) -> PrimeData:
    """PrimeData for a squarefree monomial ideal: computed covers and heights;
    radical and finite pd hold in the regular monomial setting."""
    primes = monomial_minimal_primes(I)
    return PrimeData(
        primes=tuple(primes),
        heights=tuple(len(P.gens) for P in primes),
        max_local_gens=max(len(P.gens) for P in primes),
        asserted_radical=True,
        asserted_finite_pd=True,
        checked={"primes": "computed minimal covers", "heights": "computed"},
    )


def _monomial_power_gens(vars_idx, n, nvars):
    """Exponent tuples of the n-th power of a variable ideal."""
    out = []
    for combo in itertools.combinations_with_replacement(sorted(vars_idx), n):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


# ---------------------------------------------------------------------------
# symbolic power
# ---------------------------------------------------------------------------


def symbolic_power(I, n: int, pd: PrimeData, strategy=None, budget=None, diag=None):
    """The n-th symbolic power of I under the asserted prime data.

    Returns the same kind of object as I (Ideal or QuotientIdeal). The
    containment I^n <= result is re-checked on every call. Saturation
    exponents land in the optional diag dict.
    """
    if n < 1:
        raise ValueError("symbolic power needs n >= 1")
    quotient = isinstance(I, QuotientIdeal)
    if strategy is None:
        if not quotient and is_squarefree_monomial(I):
            strategy = "monomial_combinatorial"
        elif len(pd.primes) == 1:
            strategy = "saturate_by_separator"
        else:
            strategy = "intersect_minimal_primes"
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy}")
    if not pd.asserted_radical and not pd.power_embedded:
        raise ValueError(
            "inputs with possibly embedded primes need the full Ass listed "
            "(power_embedded) or an asserted-radical flag"
        )

    if strategy == "monomial_combinatorial":
        if quotient or not is_squarefree_monomial(I):
            raise ValueError("monomial_combinatorial needs a squarefree monomial ideal")
        result = _symbolic_monomial(I, n, pd)
    else:
        pd.validate_separators(budget)
        base = q_power(I, n).preimage if quotient else ideal_power(I, n)
        if strategy == "saturate_by_separator":
            if len(pd.primes) != 1:
                raise ValueError("saturate_by_separator needs exactly one listed prime")
            sat, steps = saturate(base, pd.separators[0], budget)
            if diag is not None:
                diag.setdefault("saturation_exponents", []).append(steps)
            result_ideal = sat
        else:
            pieces = []
            for s in pd.separators:
                sat, steps = saturate(base, s, budget)
                if diag is not None:
                    diag.setdefault("saturation_exponents", []).append(steps)
                pieces.append(sat)
            from .idealops import ideal_intersect

            acc = pieces[0]
            for piece in pieces[1:]:
                acc = ideal_intersect(acc, piece, budget)
            result_ideal = acc
        result = QuotientIdeal(I.ring, result_ideal.gens) if quotient else result_ideal

    _check_ordinary_inside(I, n, result, budget)
    return result


def _symbolic_monomial(I: Ideal, n: int, pd: PrimeData) -> Ideal:
    ring = I.ring
    primes = pd.primes if pd.primes else monomial_minimal_primes(I)
    var_sets = []
    for P in primes:
        idx = set()
        for g in P.gens:
            m = g.lead_monomial()
            if sum(m) != 1:
                raise ValueError("monomial strategy needs variable-generated primes")
            idx.add(m.index(1))
        var_sets.append(idx)
    inter = None
    for vs in var_sets:
        gens = _monomial_power_gens(vs, n, ring.nvars)
        if inter is None:
            inter = gens
        else:
            inter = monomial_min_gens(
                ring, [mono_lcm(a, b) for a in inter for b in gens]
            )
    return Ideal(ring, [Polynomial.monomial(ring, m) for m in monomial_min_gens(ring, inter)])


def _check_ordinary_inside(I, n, result, budget):
    if isinstance(I, QuotientIdeal):
        ok, bad = ideal_subset(q_power(I, n).preimage, result.preimage, budget)
    else:
        ok, bad = ideal_subset(ideal_power(I, n), result, budget)
    if not ok:
        raise ArithmeticError(
            f"internal error: ordinary power escaped the symbolic power (witness {bad})"
        )


# ---------------------------------------------------------------------------
# Jacobian ideals (hypersurface case: partials of f)
# ---------------------------------------------------------------------------


def jacobian_ideal(R: HypersurfaceRing) -> QuotientIdeal:
    """J(R/k) for R = S/(f): the partial derivatives of f, plus f."""
    partials = [R.f.derivative(v) for v in R.ambient.variables]
    nonzero = [g for g in partials if g]
    if not nonzero:
        log.warning(
            "all partial derivatives of %s vanish; the hypersurface is non-reduced",
            R.f,
        )
    return QuotientIdeal(R, nonzero)


def jacobian_power_product(J: QuotientIdeal, a: int, Q_sym: QuotientIdeal) -> QuotientIdeal:
    """J^a * Q_sym as a quotient ideal; a = 0 returns Q_sym unchanged."""
    if a < 0:
        raise ValueError("jacobian power needs a >= 0")
    if J.ring != Q_sym.ring:
        raise ValueError("ring mismatch between Jacobian and symbolic factor")
    if a == 0:
        return Q_sym
    return q_product(q_power(J, a), Q_sym)
