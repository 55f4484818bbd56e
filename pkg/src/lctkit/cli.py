"""Command-line front end: parse inputs, run a selection of certified
checks under explicit budgets, and emit human-readable or JSON reports.

Exit codes: 0 when the analysis completed (whatever the verdicts), 1 on
input or parse errors, 2 under --strict when some verdict is UNKNOWN only
because a resource budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, certcheck, diagnostics
from .arrangement import (Arrangement, betti, build_lattice,
                          lct_arrangement_report, nbc_betti,
                          parse_arrangement_file, poincare_polynomial,
                          terao_factorization, arrangement_to_polynomial)
from .groebner import Budget, BudgetExceeded, DEFAULT_MAX_PAIRS
from .polyring import ParseError, PolynomialRing
from .syzygy import (DEFAULT_SAITO_BUDGET, ann1_generators, anns1_generators,
                     saito_search)
from .verdicts import UNKNOWN, YES, HypothesisError, Verdict

SCHEMA_VERSION = 1

POLY_CONDITIONS = ("weights", "isolated", "euler", "bernstein",
                   "integral-roots", "free", "koszul", "conormal", "ann1", "lct")
ARRANGEMENT_CHECKS = ("lattice", "poincare", "betti", "nbc", "factorization",
                      "lct", "all")

_BUDGET_MARKERS = ("budget", "exhausted", "exceeded", "bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctkit",
        description="Exact certified checks for logarithmic comparison "
                    "conditions of polynomial divisors and hyperplane arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_poly=True):
        p.add_argument("--vars", required=True,
                       help="comma-separated variable names, e.g. x,y,z")
        if needs_poly:
            p.add_argument("--poly", required=True, help="divisor equation")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--verify", action="store_true",
                       help="re-check every certificate with the independent validator")
        p.add_argument("--strict", action="store_true",
                       help="exit 2 when a verdict is UNKNOWN due to budget exhaustion")
        p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                       help=f"S-pair ceiling per sub-analysis (default {DEFAULT_MAX_PAIRS})")
        p.add_argument("--timeout-seconds", type=float, default=None,
                       help="wall-clock ceiling per sub-analysis (default: none)")
        p.add_argument("--saito-budget", type=int, default=DEFAULT_SAITO_BUDGET,
                       help=f"basis subsets tried in the freeness search (default {DEFAULT_SAITO_BUDGET})")
        p.add_argument("--degree-bound", type=int,
                       default=diagnostics.DEFAULT_CONORMAL_DEGREE_BOUND,
                       help="degree guard for the conormal elimination")

    for name in ("weights", "isolated", "lct", "bernstein", "euler", "free",
                 "koszul", "conormal", "ann1"):
        common(sub.add_parser(name, help=f"run the {name} check"))
    p_all = sub.add_parser("all", help="run the full battery and the orchestrated verdict")
    common(p_all)
    p_arr = sub.add_parser("arrangement", help="hyperplane arrangement reports")
    common(p_arr, needs_poly=False)
    p_arr.add_argument("--file", required=True,
                       help="arrangement file: one degree-one form per line")
    p_arr.add_argument("--check", choices=ARRANGEMENT_CHECKS, default="all")
    return parser


def _budget(args, label: str) -> Budget:
    return Budget(max_pairs=args.max_pairs, timeout_seconds=args.timeout_seconds,
                  label=label)


def _verdict_entry(condition: str, verdict: Verdict) -> dict:
    entry = {"condition": condition}
    entry.update(verdict.to_dict())
    return entry


def _wrap(condition: str, runner) -> tuple[dict, float]:
    start = time.monotonic()
    try:
        verdict = runner()
    except HypothesisError as exc:
        verdict = Verdict(UNKNOWN, condition, reason=f"hypothesis unmet: {exc}")
    except BudgetExceeded as exc:
        verdict = Verdict(UNKNOWN, condition, reason=str(exc))
    elapsed = time.monotonic() - start
    return _verdict_entry(condition, verdict), elapsed


# -- polynomial conditions -----------------------------------------------------------


def _run_weights(h, args) -> Verdict:
    weights = diagnostics.find_weights(h, _budget(args, "weights"))
    if weights is None:
        return Verdict("NO", "weight-solve", certificate={
            "note": "the exponent system has no strictly positive solution",
            "exponents": [list(e) for e, _ in sorted(h.iter_terms())],
        })
    return Verdict(YES, "weight-solve", certificate={
        "weights": [str(w) for w in weights.weights],
        "degree": str(weights.degree),
    })


def _run_bernstein(h, args) -> Verdict:
    roots = diagnostics.bernstein_whis(h, _budget(args, "bernstein"))
    return Verdict(YES, "bernstein-closed-form", certificate={
        "roots": [[r, m] for r, m in roots.as_pairs()],
    })


def _run_free(h, args) -> Verdict:
    verdict, _ = saito_search(h, args.saito_budget, _budget(args, "freeness"))
    return verdict


def _run_ann1(h, args) -> Verdict:
    reciprocal = ann1_generators(h, _budget(args, "annihilators"))
    power = anns1_generators(h, _budget(args, "annihilators"))
    def payload(ops):
        return [{"vector": [str(a) for a in op.vector],
                 "scalar": str(op.scalar),
                 "rendered": str(op)} for op in ops]
    return Verdict(YES, "order-one-annihilators", certificate={
        "operators": payload(reciprocal),
        "power_operators": payload(power),
        "note": "order-at-most-one layer only; higher-order generation is not decided",
    })


def _poly_runners(h, args):
    return {
        "weights": lambda: _run_weights(h, args),
        "isolated": lambda: diagnostics.isolated_singularity_at_origin(
            h, _budget(args, "isolation")),
        "euler": lambda: diagnostics.euler_homogeneous(h, _budget(args, "euler")),
        "bernstein": lambda: _run_bernstein(h, args),
        "integral-roots": lambda: diagnostics.condition_B_whis(
            h, _budget(args, "integral roots")),
        "free": lambda: _run_free(h, args),
        "koszul": lambda: diagnostics.koszul_free(
            h, _budget(args, "koszul"), saito_budget=args.saito_budget),
        "conormal": lambda: diagnostics.conormal_linear(
            h, args.degree_bound, _budget(args, "conormal")),
        "ann1": lambda: _run_ann1(h, args),
        "lct": lambda: diagnostics.lct_verdict(
            h, max_pairs=args.max_pairs, timeout_seconds=args.timeout_seconds,
            saito_budget=args.saito_budget, degree_bound=args.degree_bound),
    }


# -- report assembly ------------------------------------------------------------------


def _render_text(report: dict, stream):
    echo = report["input"]
    if "polynomial" in echo:
        stream.write(f"input: {echo['polynomial']}  [vars {','.join(echo['variables'])}]\n")
    else:
        stream.write(f"arrangement of {len(echo['forms'])} hyperplanes "
                     f"[vars {','.join(echo['variables'])}]\n")
        for form in echo["forms"]:
            stream.write(f"  {form}\n")
    for entry in report["results"]:
        line = f"{entry['condition']}: {entry['value']}  (rule {entry['rule']})"
        if "verified" in entry:
            line += "  [certificate re-checked]" if entry["verified"] else "  [CERTIFICATE CHECK FAILED]"
        stream.write(line + "\n")
        if entry.get("reason"):
            stream.write(f"  reason: {entry['reason']}\n")
        if entry.get("certificate"):
            stream.write(f"  certificate: {json.dumps(entry['certificate'], sort_keys=True)}\n")
        for caveat in entry.get("caveats", ()):
            stream.write(f"  caveat: {caveat}\n")
    for condition, seconds in report["timings"].items():
        stream.write(f"time: {condition} {seconds:.3f}s\n")


def _assemble(input_echo: dict, results: list[dict], timings: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "versions": {"lctkit": __version__},
        "input": input_echo,
        "results": results,
        "timings": timings,
    }


def _budget_limited(entry: dict) -> bool:
    reason = entry.get("reason") or ""
    return entry["value"] == UNKNOWN and any(m in reason for m in _BUDGET_MARKERS)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        variables = [v.strip() for v in args.vars.split(",") if v.strip()]
        if args.command == "arrangement":
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
            arrangement = parse_arrangement_file(text, variables)
            return _run_arrangement(arrangement, args)
        ring = PolynomialRing(variables)
        h = ring.parse(args.poly)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    runners = _poly_runners(h, args)
    selected = POLY_CONDITIONS if args.command == "all" else (args.command,)
    results, timings = [], {}
    for condition in selected:
        entry, elapsed = _wrap(condition, runners[condition])
        results.append(entry)
        timings[condition] = elapsed
    if args.verify:
        for entry in results:
            entry["verified"] = certcheck.verify_entry(entry, h)
    report = _assemble({"variables": list(ring.variables), "polynomial": str(h)},
                       results, timings)
    _emit(report, args)
    if args.strict and any(_budget_limited(e) for e in results):
        return 2
    return 0


def _run_arrangement(arrangement: Arrangement, args) -> int:
    results, timings = [], {}
    lattice = None

    def get_lattice():
        nonlocal lattice
        if lattice is None:
            lattice = build_lattice(arrangement)
        return lattice

    checks = ARRANGEMENT_CHECKS[:-1] if args.check == "all" else (args.check,)
    for check in checks:
        start = time.monotonic()
        if check == "lattice":
            lat = get_lattice()
            verdict = Verdict(YES, "intersection-lattice", certificate={
                "flats": len(lat),
                "rank": lat.rank(),
                "mobius_by_rank": _mobius_table(lat),
            })
        elif check == "poincare":
            verdict = Verdict(YES, "whitney-moebius-sum", certificate={
                "poincare": str(poincare_polynomial(arrangement, get_lattice())),
            })
        elif check == "betti":
            verdict = Verdict(YES, "whitney-moebius-sum", certificate={
                "betti": list(betti(arrangement, get_lattice())),
            })
        elif check == "nbc":
            verdict = Verdict(YES, "no-broken-circuit-count", certificate={
                "nbc": list(nbc_betti(arrangement)),
            })
        elif check == "factorization":
            verdict = terao_factorization(arrangement, get_lattice())
        else:  # lct
            verdict = lct_arrangement_report(arrangement, get_lattice())
        entry = _verdict_entry(f"arrangement.{check}", verdict)
        results.append(entry)
        timings[f"arrangement.{check}"] = time.monotonic() - start
    if args.verify:
        for entry in results:
            if entry["rule"] in ("poincare-integer-factorization", "low-rank-arrangement"):
                entry["verified"] = certcheck.verify_entry(entry, arrangement)
            else:
                entry["verified"] = certcheck.verify_entry(
                    entry, arrangement_to_polynomial(arrangement))
    report = _assemble({
        "variables": list(arrangement.ring.variables),
        "forms": [str(f) for f in arrangement.forms],
    }, results, timings)
    _emit(report, args)
    if args.strict and any(_budget_limited(e) for e in results):
        return 2
    return 0


def _mobius_table(lattice) -> dict:
    table: dict[str, list[int]] = {}
    for flat in lattice.flats:
        table.setdefault(str(flat.rank), []).append(flat.mobius)
    return {rank: sorted(values) for rank, values in table.items()}


def _emit(report: dict, args):
    if args.format == "json":
        json.dump(report, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    else:
        _render_text(report, sys.stdout)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
