"""Executable verifiers for the symbolic-power containment theorems, plus the
curated example registry.

Every check returns a ContainmentReport whose verdict is computed exactly;
"fails" always carries a witness polynomial that is independently re-checkable
(normal form, and the linear-algebra oracle when the instance fits its size
cap). Reports serialize deterministically; wall-clock timings stay out of the
serialized form unless explicitly requested.
"""

from __future__ import annotations

import itertools
import json
import logging
import random
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .groebner import Ideal, ideal_equal, ideal_member, ideal_subset
from .idealops import (
    PolyMatrix,
    brute_membership_oracle,
    ideal_colon,
    ideal_power,
    minors,
)
from .frobenius import default_e_max, fpt_lower_bound, hypersurface_Ie
from .quotient import (
    HypersurfaceRing,
    QuotientIdeal,
    q_equal,
    q_ideal,
    q_member,
    q_power,
    q_subset,
)
from .rings import Polynomial, format_poly, make_ring
from .symbolic import (
    PrimeData,
    big_height,
    jacobian_ideal,
    jacobian_power_product,
    symbolic_power,
)

log = logging.getLogger(__name__)

DEFAULT_EXPONENT_CAP = 7
DEFAULT_Q_CAP = 25


@dataclass
class ContainmentReport:
    """Structured verdict with provenance and diagnostics."""

    theorem_tag: str
    params: dict
    verdict: str  # holds | fails | skipped
    witness: str | None = None
    reason: str | None = None
    expected: str = "holds"
    origin: str | None = None  # how the expectation was established:
    # worked-example (stated values), derived (independent computation), forced (construction)
    diagnostics: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """True when the computed verdict matches the registry expectation."""
        if self.verdict == "skipped":
            return True
        return self.verdict == self.expected

    def to_dict(self, include_timings=False):
        diag = {
            k: v
            for k, v in sorted(self.diagnostics.items())
            if include_timings or not k.endswith("_seconds")
        }
        return {
            "theorem_tag": self.theorem_tag,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "verdict": self.verdict,
            "expected": self.expected,
            "ok": self.ok,
            "witness": self.witness,
            "reason": self.reason,
            "origin": self.origin,
            "diagnostics": diag,
        }

    def to_json(self, include_timings=False):
        return json.dumps(self.to_dict(include_timings), sort_keys=True)


def _is_quotient(X):
    return isinstance(X, QuotientIdeal)


def _power(X, n):
    return q_power(X, n) if _is_quotient(X) else ideal_power(X, n)


def _subset(A, B, budget=None):
    return q_subset(A, B, budget) if _is_quotient(A) else ideal_subset(A, B, budget)


def _equal(A, B, budget=None):
    return q_equal(A, B, budget) if _is_quotient(A) else ideal_equal(A, B, budget)


def _member(f, X, budget=None):
    return q_member(f, X, budget) if _is_quotient(X) else ideal_member(f, X, budget)


def _gens_of(X):
    return X.named_gens if _is_quotient(X) else X.gens


def _gb_len(X):
    I = X.preimage if _is_quotient(X) else X
    return len(I.groebner_basis())


def _recheck_witness(witness, lhs, rhs, budget=None, oracle_degree_slack=2):
    """Independent confirmation that witness ∈ lhs and witness ∉ rhs."""
    checks = {
        "witness_in_lhs": _member(witness, lhs, budget),
        "witness_not_in_rhs": not _member(witness, rhs, budget),
    }
    rhs_ideal = rhs.preimage if _is_quotient(rhs) else rhs
    gens = [g for g in rhs_ideal.gens if g]
    if gens:
        min_deg = min(g.degree() for g in gens)
        bound = max(witness.degree() - min_deg, 0) + oracle_degree_slack
        try:
            checks["oracle_confirms_non_membership"] = not brute_membership_oracle(
                witness, rhs_ideal, bound
            )
        except BudgetExceeded:
            checks["oracle_confirms_non_membership"] = "skipped(size cap)"
    return checks


def _finish(tag, params, ok, wit, lhs, rhs, expected, diag, t0, budget=None):
    diag = dict(diag)
    diag["lhs_gens"] = len(_gens_of(lhs))
    diag["rhs_gens"] = len(_gens_of(rhs))
    diag["rhs_gb"] = _gb_len(rhs)
    diag["elapsed_seconds"] = round(time.perf_counter() - t0, 3)
    if ok:
        return ContainmentReport(tag, params, "holds", expected=expected, diagnostics=diag)
    diag["witness_recheck"] = _recheck_witness(wit, lhs, rhs, budget)
    return ContainmentReport(
        tag, params, "fails", witness=format_poly(wit), expected=expected, diagnostics=diag
    )


def check_fpure_containment(
    Q,
    pd: PrimeData,
    n: int,
    use_jacobian: bool = False,
    budget=None,
    exponent_cap: int | None = DEFAULT_EXPONENT_CAP,
    expected: str = "holds",
) -> ContainmentReport:
    """The F-pure containment Q^((hn-h+1)) ⊆ Q^n, with the Jacobian repair
    J^n Q^((hn-h+1)) ⊆ Q^n when use_jacobian is set."""
    t0 = time.perf_counter()
    if not pd.asserted_fpure_quotient:
        raise ValueError("registry must assert R/Q F-pure for this check")
    quotient = _is_quotient(Q)
    if use_jacobian and not quotient:
        raise ValueError("the Jacobian variant needs a hypersurface ambient")
    if not use_jacobian and quotient and not pd.asserted_finite_pd:
        raise ValueError(
            "finite projective dimension must be asserted for the non-Jacobian "
            "containment in a singular ambient"
        )
    h = big_height(pd)
    sym_exp = h * n - h + 1
    tag = "jacobian-fpure-containment" if use_jacobian else "fpure-containment"
    params = {"n": n, "h": h, "symbolic_exponent": sym_exp}
    if exponent_cap is not None and sym_exp > exponent_cap:
        return ContainmentReport(
            tag,
            params,
            "skipped",
            reason=f"symbolic exponent {sym_exp} exceeds the default cap {exponent_cap}; "
            "pass exponent_cap to override",
            expected=expected,
        )
    diag = {}
    lhs = symbolic_power(Q, sym_exp, pd, budget=budget, diag=diag)
    if use_jacobian:
        J = jacobian_ideal(Q.ring)
        lhs = jacobian_power_product(J, n, lhs)
        params["jacobian_exponent"] = n
    rhs = _power(Q, n)
    ok, wit = _subset(lhs, rhs, budget)
    return _finish(tag, params, ok, wit, lhs, rhs, expected, diag, t0, budget)


def check_sfr_containment(
    Q,
    pd: PrimeData,
    n: int,
    use_jacobian: bool = False,
    budget=None,
    exponent_cap: int | None = DEFAULT_EXPONENT_CAP,
    expected: str = "holds",
    require_assertions: bool = True,
) -> ContainmentReport:
    """The strongly-F-regular containment Q^(((h-1)(n-1)+1)) ⊆ Q^n (equality
    at h = 2), with the Jacobian repair J^(2n-2) * lhs when use_jacobian.

    require_assertions=False lets the registry probe sharpness cases whose
    hypotheses deliberately fail; the report records that.
    """
    t0 = time.perf_counter()
    if require_assertions and not pd.asserted_sfr_quotient:
        raise ValueError("registry must assert R/Q strongly F-regular for this check")
    quotient = _is_quotient(Q)
    if use_jacobian:
        if not quotient:
            raise ValueError("the Jacobian variant needs a hypersurface ambient")
        if pd.max_local_gens is None:
            raise ValueError("the Jacobian variant needs max_local_gens in the prime data")
        h = pd.max_local_gens
    else:
        h = big_height(pd)
        if quotient and not pd.asserted_finite_pd:
            raise ValueError(
                "finite projective dimension must be asserted for the non-Jacobian "
                "containment in a singular ambient"
            )
    if h < 2:
        raise ValueError("the strongly F-regular containments need h >= 2")
    sym_exp = (h - 1) * (n - 1) + 1
    tag = "jacobian-sfr-containment" if use_jacobian else "sfr-containment"
    params = {"n": n, "h": h, "symbolic_exponent": sym_exp}
    if not require_assertions:
        params["hypotheses"] = "probe (assertions waived)"
    if exponent_cap is not None and sym_exp > exponent_cap:
        return ContainmentReport(
            tag,
            params,
            "skipped",
            reason=f"symbolic exponent {sym_exp} exceeds the default cap {exponent_cap}",
            expected=expected,
        )
    diag = {}
    lhs = symbolic_power(Q, sym_exp, pd, budget=budget, diag=diag)
    if use_jacobian:
        J = jacobian_ideal(Q.ring)
        lhs = jacobian_power_product(J, 2 * n - 2, lhs)
        params["jacobian_exponent"] = 2 * n - 2
    rhs = _power(Q, n)
    ok, wit = _subset(lhs, rhs, budget)
    if h == 2 and not use_jacobian:
        # Q^n <= Q^((n)) is automatic, so the subset verdict is the equality verdict
        diag["equality_checked"] = True
        diag["equality_holds"] = ok
    return _finish(tag, params, ok, wit, lhs, rhs, expected, diag, t0, budget)


def check_fpt_containment(
    I,
    pd: PrimeData,
    n: int,
    fpt_floor="auto",
    e_max: int | None = None,
    use_jacobian: bool | None = None,
    budget=None,
    expected: str = "holds",
) -> ContainmentReport:
    """The threshold containment I^((hn - floor fpt)) ⊆ I^n; the floor comes
    from the nu_e lower bound in auto mode (a smaller floor only strengthens
    the tested instance). Hypersurface inputs use the Jacobian repair J^n."""
    t0 = time.perf_counter()
    if not pd.asserted_radical:
        raise ValueError("the fpt containments need an asserted-radical ideal")
    quotient = _is_quotient(I)
    if use_jacobian is None:
        use_jacobian = quotient
    if use_jacobian and not quotient:
        raise ValueError("the Jacobian variant needs a hypersurface ambient")
    h = big_height(pd)
    diag = {}
    if fpt_floor == "auto":
        p = I.ring.ambient.p if quotient else I.ring.p
        est = fpt_lower_bound(I, e_max or default_e_max(p), budget)
        floor = est.floor_lower_bound
        diag["nu_values"] = list(est.nu_values)
        diag["fpt_lower_bound"] = str(est.lower_bound)
    else:
        floor = int(fpt_floor)
    sym_exp = h * n - floor
    tag = "jacobian-fpt-containment" if use_jacobian else "fpt-containment"
    params = {"n": n, "h": h, "fpt_floor": floor, "symbolic_exponent": sym_exp}
    if sym_exp < 1:
        return ContainmentReport(
            tag, params, "skipped",
            reason="floor at least h*n makes the symbolic exponent non-positive",
            expected=expected,
        )
    lhs = symbolic_power(I, sym_exp, pd, budget=budget, diag=diag)
    if use_jacobian:
        J = jacobian_ideal(I.ring)
        lhs = jacobian_power_product(J, n, lhs)
        params["jacobian_exponent"] = n
    rhs = _power(I, n)
    ok, wit = _subset(lhs, rhs, budget)
    return _finish(tag, params, ok, wit, lhs, rhs, expected, diag, t0, budget)


def check_symbolic_into_Ie(
    Q, pd: PrimeData, n: int, e: int, budget=None,
    q_cap: int | None = DEFAULT_Q_CAP, expected: str = "holds",
) -> ContainmentReport:
    """Q^((q(h+n-1)-h+1)) ⊆ I_e(Q^((n))) with h = max_local_gens; the right
    side is the bracket power in a regular ambient."""
    t0 = time.perf_counter()
    if pd.max_local_gens is None:
        raise ValueError("this check needs max_local_gens in the prime data")
    h = pd.max_local_gens
    quotient = _is_quotient(Q)
    p = Q.ring.ambient.p if quotient else Q.ring.p
    q = p**e
    sym_exp = q * (h + n - 1) - h + 1
    tag = "symbolic-into-ie"
    params = {"n": n, "e": e, "q": q, "h": h, "symbolic_exponent": sym_exp}
    if q_cap is not None and q > q_cap:
        return ContainmentReport(
            tag, params, "skipped",
            reason=f"q = {q} exceeds the default cap {q_cap}", expected=expected,
        )
    diag = {}
    lhs = symbolic_power(Q, sym_exp, pd, budget=budget, diag=diag)
    base = symbolic_power(Q, n, pd, budget=budget, diag=diag)
    if quotient:
        rhs = hypersurface_Ie(Q.ring, base, e, budget)
    else:
        from .idealops import bracket_power

        rhs = bracket_power(base, e)
    ok, wit = _subset(lhs, rhs, budget)
    return _finish(tag, params, ok, wit, lhs, rhs, expected, diag, t0, budget)


# ---------------------------------------------------------------------------
# squarefree monomial sweep support
# ---------------------------------------------------------------------------


def squarefree_antichains(nvars: int):
    """Canonical representatives (up to variable permutation) of the nonzero
    proper squarefree monomial ideals on at most nvars variables.

    Each ideal is a tuple of generator bitmasks forming an antichain.
    """
    masks = list(range(1, 1 << nvars))
    perms = list(itertools.permutations(range(nvars)))

    def apply(perm, mask):
        out = 0
        for i in range(nvars):
            if mask >> i & 1:
                out |= 1 << perm[i]
        return out

    antichains = []

    def extend(chosen, rest):
        antichains.append(tuple(chosen))
        for idx, m in enumerate(rest):
            ok = all(
                not (m & c == m or m & c == c) for c in chosen
            )  # incomparable to everything chosen
            if ok:
                extend(chosen + [m], rest[idx + 1 :])

    extend([], masks)
    seen = set()
    reps = []
    for ac in antichains:
        if not ac:
            continue
        canon = min(
            tuple(sorted(apply(perm, m) for m in ac)) for perm in perms
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    reps.sort(key=lambda ac: (len(ac), ac))
    return reps


def ideal_from_masks(ring, masks) -> Ideal:
    gens = []
    for m in masks:
        exps = tuple(1 if m >> i & 1 else 0 for i in range(ring.nvars))
        gens.append(Polynomial.monomial(ring, exps))
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# example registry
# ---------------------------------------------------------------------------


@dataclass
class ExampleSpec:
    id: str
    description: str
    defaults: dict
    runner: object
    notes: str = ""


def _as_int_list(value, default):
    if value is None:
        return list(default)
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        if ".." in value:
            lo, hi = value.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in value.split(",")]
    return [int(v) for v in value]


def xy_zk_setup(p: int, k: int):
    """The hypersurface F_p[x,y,z]/(xy - z^k) with Q = (x,z) and its prime data.

    Verified in the graded/affine model at the irrelevant maximal ideal; all
    containment data is weighted-homogeneous there.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if k % p == 0:
        raise ValueError("p must not divide k")
    ring = make_ring(p, ["x", "y", "z"])
    x = Polynomial.variable(ring, "x")
    y = Polynomial.variable(ring, "y")
    z = Polynomial.variable(ring, "z")
    f = x * y - z**k
    R = HypersurfaceRing(ring, f, reduced=True)
    Q = q_ideal(R, [x, z])
    m = q_ideal(R, [x, y, z])
    pd = PrimeData(
        primes=(Q,),
        separators=(y,),
        heights=(1,),
        max_local_gens=2,  # global generator count; a safe upper bound for the local one
        power_embedded=(m,),
        asserted_radical=True,
        asserted_finite_pd=False,  # infinite pd: the whole point of the example
        asserted_fpure_quotient=True,  # R/Q is a polynomial ring
        asserted_sfr_quotient=True,
        checked={"fpure": "R/Q regular", "note": "graded model at the origin"},
    )
    return R, Q, pd


def _run_xy_zk(params, seed=0, budget=None):
    p = int(params.get("p", 5))
    k = int(params.get("k", 2))
    n_values = _as_int_list(params.get("n"), [1, 2])
    R, Q, pd = xy_zk_setup(p, k)
    ring = R.ambient
    x = Polynomial.variable(ring, "x")
    z = Polynomial.variable(ring, "z")
    reports = []

    J = jacobian_ideal(R)
    J_expected = q_ideal(
        R, [x, Polynomial.variable(ring, "y"), z ** (k - 1)]
    )
    t0 = time.perf_counter()
    ok = q_equal(J, J_expected, budget)
    reports.append(
        ContainmentReport(
            "jacobian-ideal-form",
            {"p": p, "k": k},
            "holds" if ok else "fails",
            diagnostics={"elapsed_seconds": round(time.perf_counter() - t0, 3)},
        )
    )

    for n in n_values:
        base_params = {"p": p, "k": k, "n": n}
        diag = {}
        t0 = time.perf_counter()
        sym_kn = symbolic_power(Q, k * n, pd, budget=budget, diag=diag)
        ok = q_equal(sym_kn, q_ideal(R, [x**n]), budget)
        reports.append(
            ContainmentReport(
                "symbolic-power-principal-form",
                dict(base_params, symbolic_exponent=k * n),
                "holds" if ok else "fails",
                diagnostics=dict(diag, elapsed_seconds=round(time.perf_counter() - t0, 3)),
            )
        )

        Q_kn = q_power(Q, k * n)
        for r in range(k):
            wit = x ** (n + r)
            t0 = time.perf_counter()
            sym = sym_kn if r == 0 else symbolic_power(Q, k * n + r, pd, budget=budget)
            in_sym = q_member(wit, sym, budget)
            reports.append(
                ContainmentReport(
                    "symbolic-ladder-membership",
                    dict(base_params, r=r, symbolic_exponent=k * n + r),
                    "holds" if in_sym else "fails",
                    witness=format_poly(wit),
                    diagnostics={"elapsed_seconds": round(time.perf_counter() - t0, 3)},
                )
            )
            # as displayed, the exclusion targets Q^(kn); at the corner
            # n = 1, r = k-1 that is provably false (x^k generates into
            # Q^k), so there the registry expects the failure and asserts
            # the strict exclusion from Q^(kn+r), which the example's
            # symbolic-vs-ordinary deduction actually uses.
            corner = n == 1 and r == k - 1
            t0 = time.perf_counter()
            outside = not q_member(wit, Q_kn, budget)
            reports.append(
                ContainmentReport(
                    "symbolic-ladder-noncontainment",
                    dict(base_params, r=r, ordinary_exponent=k * n),
                    "holds" if outside else "fails",
                    witness=format_poly(wit),
                    expected="fails" if corner else "holds",
                    diagnostics={
                        "elapsed_seconds": round(time.perf_counter() - t0, 3),
                        **(
                            {
                                "note": "displayed exclusion is index-sloppy at "
                                "this corner; see the strict variant"
                            }
                            if corner
                            else {}
                        ),
                    },
                )
            )
            if r:
                t0 = time.perf_counter()
                outside_strict = not q_member(wit, q_power(Q, k * n + r), budget)
                reports.append(
                    ContainmentReport(
                        "symbolic-ladder-noncontainment-strict",
                        dict(base_params, r=r, ordinary_exponent=k * n + r),
                        "holds" if outside_strict else "fails",
                        witness=format_poly(wit),
                        diagnostics={
                            "elapsed_seconds": round(time.perf_counter() - t0, 3)
                        },
                    )
                )

        t0 = time.perf_counter()
        lhs = jacobian_power_product(J, (k - 1) * n, sym_kn)
        ok, wit = q_subset(lhs, Q_kn, budget)
        rep = ContainmentReport(
            "jacobian-fpure-sharp-containment",
            dict(base_params, jacobian_exponent=(k - 1) * n, ordinary_exponent=k * n),
            "holds" if ok else "fails",
            witness=None if ok else format_poly(wit),
            diagnostics={"elapsed_seconds": round(time.perf_counter() - t0, 3)},
        )
        reports.append(rep)

        w_exp = (k - 1) * n - 1
        if w_exp >= 1:
            wit = (z**w_exp) * (x**n)
            t0 = time.perf_counter()
            outside = not q_member(wit, Q_kn, budget)
            reports.append(
                ContainmentReport(
                    "jacobian-sharpness-witness",
                    dict(base_params, witness_z_exponent=w_exp, ordinary_exponent=k * n),
                    "holds" if outside else "fails",
                    witness=format_poly(wit),
                    diagnostics={
                        "elapsed_seconds": round(time.perf_counter() - t0, 3),
                        "note": "the displayed non-containment statement is "
                        "paper-ambiguous; only the witness-level fact is encoded",
                    },
                )
            )
        else:
            reports.append(
                ContainmentReport(
                    "jacobian-sharpness-witness",
                    dict(base_params, ordinary_exponent=k * n),
                    "skipped",
                    reason="witness exponent (k-1)n-1 vanishes at this grid point",
                )
            )
    return reports


def random_linear_forms_matrix(ring, rows, cols, rng):
    entries = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            coeffs = [rng.randrange(ring.p) for _ in range(ring.nvars)]
            row.append(
                Polynomial(
                    ring,
                    [
                        (tuple(1 if j == i else 0 for j in range(ring.nvars)), c)
                        for i, c in enumerate(coeffs)
                        if c
                    ],
                )
            )
        entries.append(row)
    return PolyMatrix(ring, entries)


def generic_determinantal_setup(p: int, size: int, d: int, seed: int, budget=None):
    """Random specialization of the generic 2x3-determinantal example: the
    ideal of size x size minors of a size x (size+1) matrix of random linear
    forms in d variables over F_p.

    Degenerate draws (zero or repeated minors, unit ideal, separator not a
    nonzerodivisor) are re-drawn with a shifted seed and logged.
    """
    ring = make_ring(p, [f"x{i}" for i in range(1, d + 1)])
    sep = Polynomial.variable(ring, ring.variables[-1])
    attempts = 0
    while True:
        rng = random.Random(seed + 1000 * attempts)
        M = random_linear_forms_matrix(ring, size, size + 1, rng)
        I = minors(M, size)
        degenerate = len(I.gens) != size + 1
        if not degenerate:
            degenerate = I.groebner_basis(budget).is_unit()
        if not degenerate:
            # separator must be a nonzerodivisor mod I: (I : sep) = I
            degenerate = not ideal_equal(ideal_colon(I, sep, budget), I, budget)
        if not degenerate:
            break
        attempts += 1
        log.info("degenerate determinantal draw (seed %s, attempt %s)", seed, attempts)
        if attempts > 5:
            raise ArithmeticError("persistent degenerate draws; seed range unusable")
    pd = PrimeData(
        primes=(I,),
        separators=(sep,),
        heights=(2,),
        max_local_gens=2,
        power_embedded=(Ideal(ring, [Polynomial.variable(ring, v) for v in ring.variables]),),
        asserted_radical=True,
        asserted_finite_pd=True,  # height-two perfect ideal: finite free resolution
        asserted_fpure_quotient=(d > size + 1),
        asserted_sfr_quotient=(d > size + 1),
        checked={"draw_attempts": attempts},
    )
    return ring, I, pd, attempts


def _run_generic_determinantal(params, seed=0, budget=None):
    p = int(params.get("p", 101))
    size = int(params.get("size", 2))
    d = int(params.get("d", 6))
    default_j = [2, 3] if d > size + 1 else [2]
    j_values = _as_int_list(params.get("j", params.get("n")), default_j)
    ring, I, pd, attempts = generic_determinantal_setup(p, size, d, seed, budget)
    expected = "holds" if d > size + 1 else "fails"
    reports = []
    for j in j_values:
        rep = check_sfr_containment(
            I,
            pd,
            j,
            budget=budget,
            expected=expected,
            require_assertions=(d > size + 1),
        )
        rep.params.update({"p": p, "d": d, "size": size, "seed": seed, "j": j})
        rep.diagnostics["draw_attempts"] = attempts
        reports.append(rep)
    return reports


REGISTRY = {
    "xy-zk": ExampleSpec(
        id="xy-zk",
        description=(
            "Q = (x,z) inside F_p[x,y,z]/(xy - z^k): principal symbolic powers, "
            "the x^(n+r) ladder, and the sharp Jacobian repair exponent"
        ),
        defaults={"p": 5, "k": 2, "n": "1..2"},
        runner=_run_xy_zk,
        notes="graded avatar of the power-series example; p must not divide k",
    ),
    "generic-determinantal": ExampleSpec(
        id="generic-determinantal",
        description=(
            "size x size minors of a random (size)x(size+1) matrix of linear "
            "forms: symbolic equals ordinary in d > size+1 variables, fails "
            "with a certified witness at d = size+1"
        ),
        defaults={"p": 101, "size": 2, "d": 6, "j": "2,3"},
        runner=_run_generic_determinantal,
        notes="random specialization over F_p stands in for generic coefficients",
    ),
}


def run_example(example_id: str, params=None, seed: int = 0, budget=None):
    """Evaluate every expectation of a registered example; reports in
    canonical order."""
    if example_id not in REGISTRY:
        raise ValueError(f"unknown example id {example_id!r}")
    spec = REGISTRY[example_id]
    merged = dict(spec.defaults)
    merged.update(params or {})
    return spec.runner(merged, seed=seed, budget=budget)
