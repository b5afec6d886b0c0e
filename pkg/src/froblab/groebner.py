"""Buchberger's algorithm, normal forms, and the membership decision kernel.

Everything downstream (colon ideals, saturations, Frobenius criteria,
containment reports) reduces to the three decision procedures here:
ideal_member, ideal_subset, ideal_equal.

Implementation notes: polynomials are handled as their canonical term tuples;
reduction keeps the working polynomial in a dict with a lazy max-heap over the
ring's monomial order. Pair selection is the normal strategy (minimal lcm
degree first) with Buchberger's product and chain criteria. All tie-breaks are
canonical, so runs are reproducible bit for bit.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BudgetExceeded, RingMismatch
from .rings import Polynomial, mono_div, mono_divides, mono_lcm, mono_mul


@dataclass(frozen=True)
class GroebnerBudget:
    """Resource caps; exceeding one raises BudgetExceeded, never truncates."""

    max_pairs: int = 100_000
    max_poly_terms: int = 500_000

    def scaled(self, factor):
        return GroebnerBudget(self.max_pairs * factor, self.max_poly_terms * factor)


DEFAULT_BUDGET = GroebnerBudget()


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading monomial."""

    __slots__ = ("ring", "elements")

    def __init__(self, ring, elements):
        self.ring = ring
        self.elements = tuple(elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]})"

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant() and bool(self.elements[0])


class Ideal:
    """Generator list with a lazily computed, cached reduced Groebner basis.

    Zero generators are dropped; an empty list is the zero ideal.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens=()):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb = None

    @classmethod
    def unit(cls, ring):
        return cls(ring, (Polynomial.one(ring),))

    def is_zero(self):
        return not self.gens

    def groebner_basis(self, budget=None) -> GroebnerBasis:
        if self._gb is None:
            self._gb = GroebnerBasis(
                self.ring, _buchberger(self.ring, self.gens, budget or DEFAULT_BUDGET)
            )
        return self._gb

    def with_gb(self, gb: GroebnerBasis):
        """Attach a known basis (e.g. carried through a ring translation)."""
        self._gb = gb
        return self

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"


# ---------------------------------------------------------------------------
# reduction engine
# ---------------------------------------------------------------------------


def _nf_terms(ring, terms, basis, budget):
    """Full normal form of a term stream against [(lm, lc_inv, tail), ...].

    Returns canonical descending term tuple. basis entries need not be a
    Groebner basis; the result is then just *a* remainder along a
    deterministic reduction path.
    """
    p = ring.p
    negkey = ring.negkey
    work = {}
    heap = []
    for m, c in terms:
        v = (work.get(m, 0) + c) % p
        if v:
            if m not in work:
                heapq.heappush(heap, (negkey(m), m))
            work[m] = v
        else:
            work.pop(m, None)
    out = []
    cap = budget.max_poly_terms
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        hit = None
        for lm, lc_inv, tail in basis:
            q = mono_div(m, lm)
            if q is not None:
                hit = (q, lc_inv, tail)
                break
        if hit is None:
            out.append((m, c))
            continue
        q, lc_inv, tail = hit
        factor = (c * lc_inv) % p
        for m2, c2 in tail:
            mm = mono_mul(m2, q)
            v = (work.get(mm, 0) - factor * c2) % p
            if v:
                if mm not in work:
                    heapq.heappush(heap, (negkey(mm), mm))
                work[mm] = v
            else:
                work.pop(mm, None)
        if len(work) > cap:
            raise BudgetExceeded(
                f"normal form exceeded {cap} working terms; raise the budget to proceed"
            )
    return tuple(out)


def _as_reducers(ring, polys):
    """Precompute (lm, lc_inv, tail) triples for monic-or-not polynomials."""
    p = ring.p
    out = []
    for g in polys:
        terms = g.terms if isinstance(g, Polynomial) else g
        if not terms:
            continue
        lm, lc = terms[0]
        out.append((lm, pow(lc, p - 2, p), terms[1:]))
    return out


def normal_form(f: Polynomial, G, budget=None) -> Polynomial:
    """Unique remainder of f modulo a Groebner basis G (idempotent)."""
    ring = f.ring
    basis = G.elements if isinstance(G, GroebnerBasis) else tuple(G)
    reducers = _as_reducers(ring, basis)
    terms = _nf_terms(ring, f.terms, reducers, budget or DEFAULT_BUDGET)
    return Polynomial(ring, terms, canonical=True)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def _buchberger(ring, gens, budget):
    key = ring.key
    inputs = [g.monic().terms for g in gens if g]
    if not inputs:
        return ()

    basis = []  # reducer triples (lm, lc_inv=1, tail); all monic
    lms = []
    pairs = []  # heap of (lcm degree, lcm key, i, j)
    pending = set()

    def add(terms):
        k = len(basis)
        lm = terms[0][0]
        basis.append((lm, 1, terms[1:]))
        lms.append(lm)
        for i in range(k):
            lcm = mono_lcm(lms[i], lm)
            heapq.heappush(pairs, (sum(lcm), key(lcm), i, k))
            pending.add((i, k))

    for t in inputs:
        h = _nf_terms(ring, t, basis, budget)
        if h:
            add(_monic(ring, h))

    processed = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetExceeded(
                f"Buchberger exceeded {budget.max_pairs} S-pairs; raise the budget to proceed"
            )
        lmi, lmj = lms[i], lms[j]
        lcm = mono_lcm(lmi, lmj)
        # product criterion: coprime leading monomials
        if lcm == mono_mul(lmi, lmj):
            continue
        # chain criterion: some lm_k divides the lcm and both side pairs are done
        if _chain(lms, pending, i, j, lcm):
            continue
        s = _spoly_terms(ring, basis[i], basis[j], lcm)
        h = _nf_terms(ring, s, basis, budget)
        if h:
            add(_monic(ring, h))

    return _reduce_basis(ring, basis, budget)


def _chain(lms, pending, i, j, lcm):
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if mono_divides(lms[k], lcm):
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                return True
    return False


def _spoly_terms(ring, fi, fj, lcm):
    """Term stream of the S-polynomial of two monic reducer triples."""
    lmi, _, taili = fi
    lmj, _, tailj = fj
    ui = mono_div(lcm, lmi)
    uj = mono_div(lcm, lmj)
    p = ring.p
    out = [(mono_mul(m, ui), c) for m, c in taili]
    out.extend((mono_mul(m, uj), p - c) for m, c in tailj)
    return out


def _monic(ring, terms):
    lc = terms[0][1]
    if lc == 1:
        return terms
    p = ring.p
    inv = pow(lc, p - 2, p)
    return tuple((m, (c * inv) % p) for m, c in terms)


def _reduce_basis(ring, basis, budget):
    lms = [b[0] for b in basis]
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if mono_divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)

    kept = [basis[i] for i in keep]
    reduced = []
    for idx, (lm, _, tail) in enumerate(kept):
        others = [kept[k] for k in range(len(kept)) if k != idx]
        tail_nf = _nf_terms(ring, tail, others, budget)
        reduced.append(((lm, 1),) + tail_nf)

    key = ring.key
    reduced.sort(key=lambda t: key(t[0][0]))
    return tuple(Polynomial(ring, t, canonical=True) for t in reduced)


# ---------------------------------------------------------------------------
# decision procedures
# ---------------------------------------------------------------------------


def groebner_basis(I: Ideal, budget=None) -> GroebnerBasis:
    return I.groebner_basis(budget)


def ideal_member(f: Polynomial, I: Ideal, budget=None) -> bool:
    """f in I, decided by normal form against the cached reduced basis."""
    if f.ring != I.ring:
        raise RingMismatch("polynomial from a different ring")
    if not f:
        return True
    if I.is_zero():
        return False
    return not normal_form(f, I.groebner_basis(budget), budget)


def ideal_subset(I: Ideal, J: Ideal, budget=None):
    """(True, None) when I is contained in J, else (False, witness generator)."""
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    for g in I.gens:
        if not ideal_member(g, J, budget):
            return False, g
    return True, None


def ideal_equal(I: Ideal, J: Ideal, budget=None) -> bool:
    """Equality via identical reduced Groebner bases."""
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    return I.groebner_basis(budget) == J.groebner_basis(budget)
