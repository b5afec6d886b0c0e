"""Command-line front end: parse the ideal-expression DSL, dispatch checks,
emit deterministic reports.

Exit codes: 0 all expectations hold, 1 expectation failure, 2 usage or parse
error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .containment import (
    REGISTRY,
    ContainmentReport,
    check_fpt_containment,
    check_fpure_containment,
    check_sfr_containment,
    check_symbolic_into_Ie,
    run_example,
)
from .errors import BudgetExceeded, ParseError
from .frobenius import (
    default_e_max,
    fedder_is_fpure,
    fpt_lower_bound,
    is_fpure_quotient,
    sfr_witness_search,
)
from .groebner import GroebnerBudget, Ideal, ideal_subset
from .parsing import parse_gens, parse_poly, parse_ring, split_top_level
from .quotient import HypersurfaceRing, QuotientIdeal, q_ideal
from .rings import format_poly
from .symbolic import PrimeData, symbolic_power

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget_from_env():
    raw = os.environ.get("FROBLAB_MAX_PAIRS")
    if raw:
        return GroebnerBudget(max_pairs=int(raw))
    return None


def _emit(out, text):
    out.write(text + "\n")


def _report_lines(reports, as_json, include_timings=False):
    lines = []
    for rep in reports:
        if as_json:
            lines.append(rep.to_json(include_timings))
        else:
            bits = [f"[{rep.verdict.upper():>7}]", rep.theorem_tag]
            if rep.params:
                bits.append(
                    " ".join(f"{k}={rep.params[k]}" for k in sorted(rep.params))
                )
            if rep.witness:
                bits.append(f"witness: {rep.witness}")
            if rep.reason:
                bits.append(f"({rep.reason})")
            if rep.expected != "holds":
                bits.append(f"expected: {rep.expected}")
            lines.append("  ".join(bits))
    return lines


def _verdict_report(verdict, as_json):
    if as_json:
        payload = {
            "status": verdict.status,
            "e_used": list(verdict.e_used) if isinstance(verdict.e_used, tuple) else verdict.e_used,
            "condition": verdict.condition,
            "witness": format_poly(verdict.witness) if verdict.witness is not None else None,
            "notes": verdict.notes,
        }
        return [json.dumps(payload, sort_keys=True)]
    line = f"[{verdict.status.upper()}] e={verdict.e_used}"
    if verdict.condition:
        line += f" condition={verdict.condition}"
    if verdict.witness is not None:
        line += f" witness: {format_poly(verdict.witness)}"
    reason = verdict.notes.get("reason")
    if reason:
        line += f" ({reason})"
    return [line]


# ---------------------------------------------------------------------------
# script sessions
# ---------------------------------------------------------------------------


class Session:
    """State of one script run: ring, optional hypersurface, named objects."""

    def __init__(self, budget=None):
        self.ring = None
        self.hyper = None
        self.ideals = {}
        self.primedata = {}  # name -> dict of pieces until first use
        self.budget = budget
        self.reports = []

    @property
    def ambient(self):
        return self.hyper if self.hyper is not None else self.ring

    def need_ring(self):
        if self.ring is None:
            raise ParseError("no ring declared yet")
        return self.ring

    def make_ideal(self, gens_text):
        ring = self.need_ring()
        gens = parse_gens(ring, gens_text)
        if self.hyper is not None:
            return q_ideal(self.hyper, gens)
        return Ideal(ring, gens)

    def get_ideal(self, name):
        if name not in self.ideals:
            raise ParseError(f"unknown ideal name {name!r}")
        return self.ideals[name]

    def primedata_for(self, name):
        raw = self.primedata.get(name)
        if raw is None:
            raise ParseError(f"no prime data declared for {name!r}")
        if isinstance(raw, PrimeData):
            return raw
        pd = PrimeData(
            primes=tuple(raw.get("primes", ())),
            separators=tuple(raw["separators"]) if raw.get("separators") else None,
            heights=tuple(raw["heights"]) if raw.get("heights") else None,
            max_local_gens=raw.get("mu"),
            power_embedded=tuple(raw.get("embedded", ())),
            asserted_radical=raw.get("radical", True),
            asserted_finite_pd=raw.get("finite_pd", False),
            asserted_fpure_quotient=raw.get("fpure", False),
            asserted_sfr_quotient=raw.get("sfr", False),
        )
        if self.hyper is None:
            # regular ambient: finite projective dimension is automatic
            pd.asserted_finite_pd = True
        self.primedata[name] = pd
        return pd

    def raw_primedata(self, name):
        raw = self.primedata.setdefault(name, {})
        if isinstance(raw, PrimeData):
            raise ParseError(f"prime data for {name!r} already finalized by a check")
        return raw


def _parse_kv(parts):
    args, flags = {}, []
    for part in parts:
        if "=" in part:
            k, v = part.split("=", 1)
            args[k.strip()] = v.strip()
        else:
            flags.append(part.strip())
    return args, flags


def execute_statement(session: Session, line: str):
    stripped = line.split("#", 1)[0].strip()
    if not stripped:
        return
    head, _, rest = stripped.partition(" ")
    rest = rest.strip()

    if head == "ring":
        kv, flags = _parse_kv(rest.split())
        decl = flags[0] if flags else rest
        session.ring = parse_ring(decl)
        return
    if head == "hypersurface":
        ring = session.need_ring()
        session.hyper = HypersurfaceRing(ring, parse_poly(ring, rest), reduced=True)
        return
    if head == "ideal":
        name, _, gens_text = rest.partition("=")
        name = name.strip()
        if not name.isidentifier():
            raise ParseError(f"bad ideal name {name!r}")
        session.ideals[name] = session.make_ideal(gens_text.strip())
        return
    if head == "primes":
        name, _, body = rest.partition("=")
        name = name.strip()
        session.get_ideal(name)
        raw = session.raw_primedata(name)
        tokens = body.strip().split()
        kv = {}
        while tokens and "=" in tokens[-1]:
            key, _, value = tokens[-1].partition("=")
            if key == "heights":
                kv["heights"] = [int(v) for v in value.split(",")]
            elif key == "mu":
                kv["mu"] = int(value)
            else:
                raise ParseError(f"unknown primes argument {key!r}")
            tokens.pop()
        body = " ".join(tokens)
        groups = [g.strip() for g in split_top_level(body, ";") if g.strip()]
        raw["primes"] = [session.make_ideal(g) for g in groups]
        raw.update(kv)
        return
    if head == "embedded":
        name, _, body = rest.partition("=")
        name = name.strip()
        session.get_ideal(name)
        raw = session.raw_primedata(name)
        groups = [g.strip() for g in split_top_level(body.strip(), ";") if g.strip()]
        raw["embedded"] = [session.make_ideal(g) for g in groups]
        return
    if head == "separator":
        name, _, body = rest.partition("=")
        name = name.strip()
        session.get_ideal(name)
        ring = session.need_ring()
        raw = session.raw_primedata(name)
        raw["separators"] = [
            parse_poly(ring, g.strip()) for g in split_top_level(body.strip(), ";")
        ]
        return
    if head in ("assert-fpure", "assert-sfr", "assert-finite-pd"):
        name = rest.strip()
        session.get_ideal(name)
        raw = session.raw_primedata(name)
        key = {"assert-fpure": "fpure", "assert-sfr": "sfr", "assert-finite-pd": "finite_pd"}[head]
        raw[key] = True
        return
    if head == "check":
        tag, _, argtext = rest.partition(" ")
        parts = argtext.split()
        if not parts:
            raise ParseError("check needs an ideal name")
        name = parts[0]
        kv, _ = _parse_kv(parts[1:])
        Q = session.get_ideal(name)
        pd = session.primedata_for(name)
        n = int(kv.get("n", 2))
        expected = kv.get("expect", "holds")
        cap = int(kv["cap"]) if "cap" in kv else None
        common = dict(budget=session.budget, expected=expected)
        if tag == "fpure":
            rep = check_fpure_containment(Q, pd, n, exponent_cap=cap, **common)
        elif tag == "jacobian-fpure":
            rep = check_fpure_containment(Q, pd, n, use_jacobian=True, exponent_cap=cap, **common)
        elif tag == "sfr":
            rep = check_sfr_containment(Q, pd, n, exponent_cap=cap, **common)
        elif tag == "jacobian-sfr":
            rep = check_sfr_containment(Q, pd, n, use_jacobian=True, exponent_cap=cap, **common)
        elif tag == "fpt":
            floor = kv.get("floor", "auto")
            if floor != "auto":
                floor = int(floor)
            e_max = int(kv["emax"]) if "emax" in kv else None
            rep = check_fpt_containment(Q, pd, n, fpt_floor=floor, e_max=e_max, **common)
        elif tag == "symbolic-ie":
            e = int(kv.get("e", 1))
            rep = check_symbolic_into_Ie(Q, pd, n, e, budget=session.budget, expected=expected)
        else:
            raise ParseError(f"unknown check tag {tag!r}")
        session.reports.append(rep)
        return
    if head == "example":
        ex_id, _, argtext = rest.partition(" ")
        kv, _ = _parse_kv(argtext.split())
        seed = int(kv.pop("seed", 0))
        session.reports.extend(run_example(ex_id, kv, seed=seed, budget=session.budget))
        return
    raise ParseError(f"unknown statement {head!r}")


def run_script(path, out=sys.stdout, as_json=False, include_timings=False, budget=None):
    """Execute a script; returns the exit code, streaming reports as they land."""
    session = Session(budget=budget or _budget_from_env())
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        _emit(out, f"error: {exc}")
        return EXIT_USAGE
    emitted = 0
    for lineno, line in enumerate(lines, start=1):
        try:
            execute_statement(session, line)
        except BudgetExceeded as exc:
            _emit(out, f"budget exhausted at line {lineno}: {exc}")
            return EXIT_BUDGET
        except (ParseError, ValueError) as exc:
            _emit(out, f"error at line {lineno}: {exc}")
            return EXIT_USAGE
        for rep in session.reports[emitted:]:
            _emit(out, _report_lines([rep], as_json, include_timings)[0])
        emitted = len(session.reports)
    failed = [r for r in session.reports if not r.ok]
    if failed:
        _emit(out, f"{len(failed)} expectation(s) failed")
        return EXIT_EXPECTATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _session_from_args(args):
    ring = parse_ring(args.ring)
    hyper = None
    if getattr(args, "hypersurface", None):
        hyper = HypersurfaceRing(ring, parse_poly(ring, args.hypersurface), reduced=True)
    return ring, hyper


def _ideal_from_args(ring, hyper, text):
    gens = parse_gens(ring, text)
    if hyper is not None:
        return q_ideal(hyper, gens)
    return Ideal(ring, gens)


def cmd_fedder(args, out):
    ring, _ = _session_from_args(args)
    I = Ideal(ring, parse_gens(ring, args.ideal))
    verdict = fedder_is_fpure(I, e=args.e, budget=_budget_from_env())
    for line in _verdict_report(verdict, args.json):
        _emit(out, line)
    return EXIT_OK if verdict.status != "refuted" else EXIT_EXPECTATION


def cmd_fpure(args, out):
    ring, hyper = _session_from_args(args)
    if hyper is None:
        raise ParseError("fpure needs --hypersurface (use fedder in a regular ring)")
    Q = q_ideal(hyper, parse_gens(ring, args.ideal) if args.ideal else [])
    verdict = is_fpure_quotient(hyper, Q, e=args.e, finite_pd=args.finite_pd,
                                budget=_budget_from_env())
    for line in _verdict_report(verdict, args.json):
        _emit(out, line)
    return EXIT_OK if verdict.status == "confirmed" else EXIT_EXPECTATION


def cmd_sfr(args, out):
    ring, hyper = _session_from_args(args)
    Q = _ideal_from_args(ring, hyper, args.ideal)
    cs = [parse_poly(ring, c) for c in args.c]
    primes = None
    if args.minimal_primes:
        primes = [
            _ideal_from_args(ring, hyper, g)
            for g in split_top_level(args.minimal_primes, ";")
        ]
    e_max = args.emax or default_e_max(ring.p)
    verdict = sfr_witness_search(Q, cs, e_max, minimal_primes=primes,
                                 budget=_budget_from_env())
    for line in _verdict_report(verdict, args.json):
        _emit(out, line)
    return EXIT_OK if verdict.status == "confirmed" else EXIT_EXPECTATION


def cmd_symbolic(args, out):
    from .symbolic import is_squarefree_monomial, primedata_for_squarefree

    ring, hyper = _session_from_args(args)
    I = _ideal_from_args(ring, hyper, args.ideal)
    pieces = {}
    if args.primes:
        pieces["primes"] = [
            _ideal_from_args(ring, hyper, g) for g in split_top_level(args.primes, ";")
        ]
        if args.heights:
            pieces["heights"] = tuple(int(h) for h in args.heights.split(","))
    if args.separator:
        pieces["separators"] = [
            parse_poly(ring, s) for s in split_top_level(args.separator, ";")
        ]
    if not pieces and hyper is None and is_squarefree_monomial(I):
        pd = primedata_for_squarefree(I)
    else:
        pd = PrimeData(
            primes=tuple(pieces.get("primes", (I,))),
            separators=tuple(pieces["separators"]) if "separators" in pieces else None,
            heights=pieces.get("heights"),
            asserted_radical=True,
        )
    diag = {}
    result = symbolic_power(I, args.n, pd, strategy=args.strategy,
                            budget=_budget_from_env(), diag=diag)
    gens = result.named_gens if hyper is not None else result.gens
    payload = {
        "symbolic_exponent": args.n,
        "generators": [format_poly(g) for g in gens],
        "diagnostics": diag,
    }
    if args.json:
        _emit(out, json.dumps(payload, sort_keys=True))
    else:
        _emit(out, f"I^({args.n}) = ({', '.join(payload['generators']) or '0'})")
        if diag.get("saturation_exponents"):
            _emit(out, f"saturation exponents: {diag['saturation_exponents']}")
    return EXIT_OK


def cmd_containment(args, out):
    ring, hyper = _session_from_args(args)
    lhs = _ideal_from_args(ring, hyper, args.lhs)
    rhs = _ideal_from_args(ring, hyper, args.rhs)
    if hyper is not None:
        from .quotient import q_subset

        ok, wit = q_subset(lhs, rhs, _budget_from_env())
    else:
        ok, wit = ideal_subset(lhs, rhs, _budget_from_env())
    if args.json:
        _emit(out, json.dumps(
            {"holds": ok, "witness": format_poly(wit) if wit else None}, sort_keys=True
        ))
    else:
        _emit(out, "holds" if ok else f"fails  witness: {format_poly(wit)}")
    return EXIT_OK if ok else EXIT_EXPECTATION


def cmd_fpt(args, out):
    ring, hyper = _session_from_args(args)
    I = _ideal_from_args(ring, hyper, args.ideal)
    e_max = args.emax or default_e_max(ring.p)
    est = fpt_lower_bound(I, e_max, _budget_from_env())
    if args.json:
        _emit(out, json.dumps({
            "nu_values": est.nu_values,
            "lower_bound": str(est.lower_bound),
            "floor": est.floor_lower_bound,
        }, sort_keys=True))
    else:
        for e, nu in est.nu_values:
            _emit(out, f"nu_{e} = {nu}")
        _emit(out, f"fpt >= {est.lower_bound}  (floor {est.floor_lower_bound})")
    return EXIT_OK


def cmd_example(args, out):
    params = {}
    for item in args.param or []:
        k, _, v = item.partition("=")
        params[k] = v
    reports = run_example(args.id, params, seed=args.seed, budget=_budget_from_env())
    lines = _report_lines(reports, args.json, args.timings)
    text = "\n".join(lines)
    _emit(out, text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_EXPECTATION


def cmd_run(args, out):
    if args.out:
        import io

        buffer = io.StringIO()
        code = run_script(args.script, out=buffer, as_json=args.json,
                          include_timings=args.timings, budget=_budget_from_env())
        text = buffer.getvalue()
        out.write(text)
        with open(args.out, "w") as fh:
            fh.write(text)
        return code
    return run_script(args.script, out=out, as_json=args.json,
                      include_timings=args.timings, budget=_budget_from_env())


def cmd_selftest(args, out):
    """Quick battery over the forced (constructor/identity) cases."""
    from . import selftest

    failures = selftest.run(out)
    return EXIT_OK if failures == 0 else EXIT_EXPECTATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="froblab",
        description="Exact positive-characteristic containment checks over F_p",
        epilog=(
            "Budgets: set FROBLAB_MAX_PAIRS to cap Buchberger S-pair processing. "
            "Search depth defaults: e_max is 3 for p <= 5, 2 for p <= 13, 1 above. "
            "Exit codes: 0 ok, 1 expectation failed, 2 usage/parse error, 3 budget."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, hyper=True):
        sp.add_argument("--ring", required=True, help='ring declaration, e.g. "F5[x,y,z]"')
        if hyper:
            sp.add_argument("--hypersurface", help="defining equation f of S/(f)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("fedder", help="classical Fedder criterion in a regular ring")
    common(sp, hyper=False)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--e", type=int, default=1)
    sp.set_defaults(func=cmd_fedder)

    sp = sub.add_parser("fpure", help="Fedder-type criterion for R/Q in a hypersurface")
    common(sp)
    sp.add_argument("--ideal", default="", help="generators of Q (empty: Q = 0, tests R itself)")
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--finite-pd", action="store_true",
                    help="assert pd(R/Q) finite so a double failure refutes")
    sp.set_defaults(func=cmd_fpure)

    sp = sub.add_parser("sfr", help="Glassbrenner-type strong F-regularity search")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--c", action="append", required=True, help="test element (repeatable)")
    sp.add_argument("--emax", type=int)
    sp.add_argument("--minimal-primes", help="semicolon-separated generator lists")
    sp.set_defaults(func=cmd_sfr)

    sp = sub.add_parser("symbolic", help="symbolic power under supplied prime data")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--primes", help="semicolon-separated generator lists")
    sp.add_argument("--heights", help="comma-separated heights for the primes")
    sp.add_argument("--separator", help="semicolon-separated separators")
    sp.add_argument("--strategy", choices=[
        "saturate_by_separator", "intersect_minimal_primes", "monomial_combinatorial",
    ])
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("containment", help="decide lhs ⊆ rhs")
    common(sp)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(func=cmd_containment)

    sp = sub.add_parser("fpt", help="nu_e values and the F-pure-threshold lower bound")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--emax", type=int)
    sp.set_defaults(func=cmd_fpt)

    sp = sub.add_parser("example", help="run a registry example")
    sp.add_argument("id", choices=sorted(REGISTRY))
    sp.add_argument("--param", action="append", help="key=value (repeatable)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timings", action="store_true")
    sp.add_argument("--out", help="also write the report stream to this path")
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("run", help="execute a script of DSL statements")
    sp.add_argument("script")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timings", action="store_true")
    sp.add_argument("--out", help="also write the report stream to this path")
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("selftest", help="run the built-in forced-case battery")
    sp.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
