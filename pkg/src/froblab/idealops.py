"""Ideal-level algebra: sums, products, powers, bracket powers, intersections,
colons, saturations, elimination, matrix minors, and an independent
linear-algebra membership oracle.

Intersections use the auxiliary-variable construction (eliminate t from
t*I + (1-t)*J); colons divide the intersection with a principal ideal exactly;
saturation iterates colons so the stabilization exponent comes out as
diagnostic data.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import BudgetExceeded, RingMismatch
from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    Ideal,
    ideal_equal,
    ideal_member,
    normal_form,
)
from .rings import (
    Polynomial,
    RingDescriptor,
    mono_div,
    mono_lcm,
    mono_mul,
)


def _dedup(gens):
    seen = set()
    out = []
    for g in gens:
        if not g:
            continue
        if g.terms in seen:
            continue
        seen.add(g.terms)
        out.append(g)
    return out


def _sorted_canonical(ring, gens):
    key = ring.key
    return sorted(gens, key=lambda g: (key(g.lead_monomial()), g.terms))


def maximal_ideal(ring: RingDescriptor) -> Ideal:
    """The irrelevant maximal ideal (all variables)."""
    return Ideal(ring, [Polynomial.variable(ring, v) for v in ring.variables])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    return Ideal(I.ring, _dedup(I.gens + J.gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    gens = _dedup(a * b for a in I.gens for b in J.gens)
    return Ideal(I.ring, _sorted_canonical(I.ring, gens))


def ideal_power(I: Ideal, n: int) -> Ideal:
    """n-fold product; I^0 is the unit ideal by convention."""
    if n < 0:
        raise ValueError("ideal power needs n >= 0")
    if n == 0:
        return Ideal.unit(I.ring)
    result = I
    for _ in range(n - 1):
        result = ideal_product(result, I)
    return result


def bracket_power(I: Ideal, e: int) -> Ideal:
    """Frobenius power I^[p^e]: q-th powers of the generators."""
    if e < 1:
        raise ValueError("bracket power needs e >= 1")
    return Ideal(I.ring, [g.frobenius(e) for g in I.gens])


def scale_ideal(f: Polynomial, I: Ideal) -> Ideal:
    """The product f*I of a polynomial with an ideal."""
    if f.ring != I.ring:
        raise RingMismatch("polynomial from a different ring")
    return Ideal(I.ring, [f * g for g in I.gens])


# ---------------------------------------------------------------------------
# ring translations for the auxiliary-variable constructions
# ---------------------------------------------------------------------------


def _aux_name(ring):
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def _extended_ring(ring, front_vars):
    """Ring with front_vars prepended under a [front | rest] block order."""
    return RingDescriptor(
        ring.p,
        tuple(front_vars) + ring.variables,
        order="block",
        blocks=(tuple(front_vars), ring.variables),
    )


def _lift(poly, ring2, pad):
    zeros = (0,) * pad
    return Polynomial(
        ring2, tuple((zeros + m, c) for m, c in poly.terms), canonical=False
    )


def _drop(poly, ring, pad):
    return Polynomial(
        ring, tuple((m[pad:], c) for m, c in poly.terms), canonical=False
    )


def eliminate(I: Ideal, kill, budget=None) -> Ideal:
    """I intersected with the subring avoiding the given variables.

    The result is expressed in the original ring; its generators are free of
    the eliminated variables.
    """
    kill = tuple(kill)
    for v in kill:
        I.ring.index(v)
    if set(kill) == set(I.ring.variables):
        raise ValueError("cannot eliminate every variable")
    if not kill:
        return I
    ring = I.ring
    killed = [v for v in ring.variables if v in set(kill)]
    keep = [v for v in ring.variables if v not in set(kill)]
    ring2 = RingDescriptor(
        ring.p, tuple(killed + keep), order="block", blocks=(tuple(killed), tuple(keep))
    )
    perm = [ring.index(v) for v in killed + keep]
    nkill = len(killed)

    def to2(f):
        return Polynomial(
            ring2, tuple((tuple(m[i] for i in perm), c) for m, c in f.terms)
        )

    inv = [0] * len(perm)
    for pos, i in enumerate(perm):
        inv[i] = pos

    def back(f):
        return Polynomial(
            ring, tuple((tuple(m[inv[i]] for i in range(len(perm))), c) for m, c in f.terms)
        )

    G = Ideal(ring2, [to2(g) for g in I.gens]).groebner_basis(budget)
    kept = [back(g) for g in G if all(g2 == 0 for m, _ in g.terms for g2 in m[:nkill])]
    return Ideal(ring, kept)


def ideal_intersect(I: Ideal, J: Ideal, budget=None) -> Ideal:
    """I ∩ J via eliminating t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    t_name = _aux_name(ring)
    ring2 = _extended_ring(ring, [t_name])
    t = Polynomial.variable(ring2, t_name)
    one_minus_t = Polynomial.one(ring2) - t
    gens2 = [t * _lift(g, ring2, 1) for g in I.gens]
    gens2 += [one_minus_t * _lift(g, ring2, 1) for g in J.gens]
    G = Ideal(ring2, gens2).groebner_basis(budget)
    kept = [_drop(g, ring, 1) for g in G if all(m[0] == 0 for m, _ in g.terms)]
    return Ideal(ring, _sorted_canonical(ring, kept))


def poly_divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """f/g when g divides f exactly; raises ArithmeticError otherwise."""
    if f.ring != g.ring:
        raise RingMismatch("polynomials from different rings")
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    p = ring.p
    lm_g, lc_g = g.terms[0]
    inv = pow(lc_g, p - 2, p)
    rest = dict(f.terms)
    key = ring.key
    out = []
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        q = mono_div(m, lm_g)
        if q is None:
            raise ArithmeticError("inexact polynomial division (internal bug signal)")
        qc = (c * inv) % p
        out.append((q, qc))
        for m2, c2 in g.terms:
            mm = mono_mul(q, m2)
            v = (rest.get(mm, 0) - qc * c2) % p
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Polynomial(ring, out)


def _colon_single(I: Ideal, g: Polynomial, budget=None) -> Ideal:
    """(I : g) = (I ∩ (g)) divided exactly by g."""
    if not g:
        raise ValueError("colon by the zero polynomial")
    if g.is_constant():
        return Ideal(I.ring, I.gens)
    if I.is_zero():
        return Ideal(I.ring)
    meet = ideal_intersect(I, Ideal(I.ring, [g]), budget)
    return Ideal(I.ring, [poly_divide_exact(h, g) for h in meet.gens])


def ideal_colon(I: Ideal, J, budget=None) -> Ideal:
    """(I : J); J may be an Ideal or a single Polynomial."""
    if isinstance(J, Polynomial):
        return _colon_single(I, J, budget)
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    gens = [g for g in J.gens if g]
    if not gens:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in gens:
        piece = _colon_single(I, g, budget)
        result = piece if result is None else ideal_intersect(result, piece, budget)
    return result


MAX_SATURATION_STEPS = 256


def saturate(I: Ideal, by, budget=None, fast=True):
    """(I : by^∞) with the stabilization exponent, by iterated colon.

    Returns (ideal, s) where s is the first index with (I : by^(s+1)) equal to
    (I : by^s). A grevlex fast path covers the classical case (homogeneous I,
    saturation by the trailing variable): divide each reduced-basis element by
    its trailing-variable power, then recover s by the smallest shift with
    sat * x^s inside I.
    """
    if isinstance(by, Ideal):
        gens = [g for g in by.gens if g]
        if not gens:
            raise ValueError("saturation by the zero ideal")
        if len(gens) == 1:
            return saturate(I, gens[0], budget, fast)
        current, steps = I, 0
        for _ in range(MAX_SATURATION_STEPS):
            nxt = ideal_colon(current, by, budget)
            if ideal_equal(nxt, current, budget):
                return current, steps
            current = nxt
            steps += 1
        raise BudgetExceeded("saturation did not stabilize within the step cap")
    f = by
    if not f:
        raise ValueError("saturation by the zero polynomial")
    if fast and _is_last_variable(I.ring, f) and all(g.is_homogeneous() for g in I.gens):
        return _saturate_grevlex_last(I, budget)
    current, steps = I, 0
    for _ in range(MAX_SATURATION_STEPS):
        nxt = _colon_single(current, f, budget)
        if ideal_equal(nxt, current, budget):
            return current, steps
        current = nxt
        steps += 1
    raise BudgetExceeded("saturation did not stabilize within the step cap")


def _is_last_variable(ring, f):
    if ring.order != "grevlex" or len(f.terms) != 1:
        return False
    m, _ = f.terms[0]
    return sum(m) == 1 and m[-1] == 1


def _saturate_grevlex_last(I: Ideal, budget):
    ring = I.ring
    G = I.groebner_basis(budget)
    divided = []
    max_val = 0
    for g in G:
        val = min((m[-1] for m, _ in g.terms), default=0)
        if val:
            max_val = max(max_val, val)
            shift = tuple([0] * (ring.nvars - 1) + [-val])
            g = Polynomial(
                ring,
                tuple((tuple(x + s for x, s in zip(m, shift)), c) for m, c in g.terms),
                canonical=True,
            )
        divided.append(g)
    sat = Ideal(ring, _sorted_canonical(ring, divided))
    if max_val == 0:
        sat._gb = G
        return sat, 0
    # smallest s with sat * x_last^s inside I equals the first stable colon index
    x_last = Polynomial.variable(ring, ring.variables[-1])
    shifted = list(sat.gens)
    for s in range(max_val + 1):
        if all(ideal_member(g, I, budget) for g in shifted):
            return sat, s
        shifted = [g * x_last for g in shifted]
    return sat, max_val


# ---------------------------------------------------------------------------
# matrices and minors
# ---------------------------------------------------------------------------


class PolyMatrix:
    """Rectangular grid of polynomials over a common ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("matrix rows have unequal length")
            for row in entries:
                for f in row:
                    if f.ring != ring:
                        raise RingMismatch("matrix entry from a different ring")
        self.ring = ring
        self.entries = entries

    @property
    def shape(self):
        if not self.entries:
            return (0, 0)
        return (len(self.entries), len(self.entries[0]))

    def determinant_of(self, rows, cols, _memo=None):
        """Laplace expansion along the first listed row, memoized on columns."""
        if _memo is None:
            _memo = {}
        key = (rows, cols)
        if key in _memo:
            return _memo[key]
        if len(rows) == 1:
            det = self.entries[rows[0]][cols[0]]
        else:
            det = Polynomial.zero(self.ring)
            r = rows[0]
            rest = rows[1:]
            for k, c in enumerate(cols):
                entry = self.entries[r][c]
                if not entry:
                    continue
                sub = self.determinant_of(rest, cols[:k] + cols[k + 1 :], _memo)
                term = entry * sub
                det = det + term if k % 2 == 0 else det - term
        _memo[key] = det
        return det


def minors(M: PolyMatrix, size: int) -> Ideal:
    """Ideal of all size x size minors."""
    rows, cols = M.shape
    if size < 1 or size > min(rows, cols):
        raise ValueError("minor size outside the matrix")
    gens = []
    memo = {}
    for rsel in itertools.combinations(range(rows), size):
        for csel in itertools.combinations(range(cols), size):
            gens.append(M.determinant_of(rsel, csel, memo))
    return Ideal(M.ring, _sorted_canonical(M.ring, _dedup(gens)))


# ---------------------------------------------------------------------------
# brute-force membership oracle (anti-Groebner)
# ---------------------------------------------------------------------------


def monomials_up_to(ring, degree):
    """All exponent tuples of total degree <= degree, deterministic order."""
    n = ring.nvars

    def rec(prefix, remaining, slots):
        if slots == 1:
            for e in range(remaining + 1):
                yield prefix + (e,)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + (e,), remaining - e, slots - 1)

    return list(rec((), degree, n))


ORACLE_SIZE_CAP = 2_000_000  # matrix cells


def brute_membership_oracle(
    f: Polynomial, I: Ideal, cofactor_degree_bound: int, size_cap=ORACLE_SIZE_CAP
) -> bool:
    """Solve f = sum h_i g_i with deg h_i <= D as a dense linear system.

    True is authoritative for membership. False only means "no certificate at
    this cofactor bound": callers must pick D >= deg f - min deg g_i plus slack
    when they want the negative direction to carry weight.
    """
    if f.ring != I.ring:
        raise RingMismatch("polynomial from a different ring")
    if not f:
        return True
    gens = [g for g in I.gens if g]
    if not gens:
        return False
    ring = f.ring
    p = ring.p
    D = cofactor_degree_bound
    cof_monos = monomials_up_to(ring, D)

    columns = []
    row_index = {}
    rows = []

    def row_of(m):
        idx = row_index.get(m)
        if idx is None:
            idx = len(rows)
            row_index[m] = idx
            rows.append(m)
        return idx

    for m, _ in f.terms:
        row_of(m)
    col_data = []
    for g in gens:
        for u in cof_monos:
            entries = []
            for m, c in g.terms:
                entries.append((row_of(mono_mul(u, m)), c))
            col_data.append(entries)
            columns.append(None)

    n_rows, n_cols = len(rows), len(col_data)
    if n_rows * n_cols > size_cap:
        raise BudgetExceeded(
            f"oracle system {n_rows}x{n_cols} exceeds the size cap {size_cap}"
        )

    A = np.zeros((n_rows, n_cols + 1), dtype=np.int64)
    for j, entries in enumerate(col_data):
        for i, c in entries:
            A[i, j] = (A[i, j] + c) % p
    for m, c in f.terms:
        A[row_index[m], n_cols] = c

    return _consistent_mod_p(A, p, n_cols)


def _consistent_mod_p(A, p, n_cols):
    """Gaussian elimination mod p on [A | b]; True iff the system is solvable."""
    n_rows = A.shape[0]
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row >= n_rows:
            break
        nz = np.nonzero(A[pivot_row:, col])[0]
        if nz.size == 0:
            continue
        r = pivot_row + int(nz[0])
        if r != pivot_row:
            A[[pivot_row, r]] = A[[r, pivot_row]]
        inv = pow(int(A[pivot_row, col]), p - 2, p)
        A[pivot_row] = (A[pivot_row] * inv) % p
        mask = np.nonzero(A[:, col])[0]
        for i in mask:
            if i != pivot_row:
                A[i] = (A[i] - A[i, col] * A[pivot_row]) % p
        pivot_row += 1
    # inconsistent iff some row is (0 ... 0 | nonzero)
    tail = A[pivot_row:]
    bad = (tail[:, :-1] == 0).all(axis=1) & (tail[:, -1] != 0)
    return not bool(bad.any())


# ---------------------------------------------------------------------------
# monomial-ideal combinatorics (independent oracles + fast paths)
# ---------------------------------------------------------------------------


def is_monomial_ideal(I: Ideal) -> bool:
    return all(g.is_monomial() for g in I.gens)


def monomial_min_gens(ring, monos):
    """Prune monomials divisible by another; canonical order."""
    monos = sorted(set(monos), key=lambda m: (sum(m), ring.key(m)))
    out = []
    for m in monos:
        if not any(mono_div(m, kept) is not None for kept in out):
            out.append(m)
    return out


def monomial_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Combinatorial intersection of monomial ideals by pairwise lcm."""
    if not (is_monomial_ideal(I) and is_monomial_ideal(J)):
        raise ValueError("monomial_intersect needs monomial ideals")
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    ring = I.ring
    monos = [
        mono_lcm(a.lead_monomial(), b.lead_monomial())
        for a in I.gens
        for b in J.gens
    ]
    return Ideal(
        ring, [Polynomial.monomial(ring, m) for m in monomial_min_gens(ring, monos)]
    )
