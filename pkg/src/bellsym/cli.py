"""Command-line surface.

Subcommands: bell, verify, restriction, hfun, bellnum, dominance-report,
species-dump.  Output is deterministic (identical invocations are
byte-identical) and coefficients always render as exact fractions.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.  The enumeration budget defaults to the BELLSYM_BUDGET
environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import bell as bellmod
from . import restriction as restmod
from . import species as speciesmod
from .errors import BudgetExceededError, CrossCheckError
from .partitions import (
    dominates,
    format_partition,
    parse_partition,
    partitions_of,
    size,
)
from .symfunc import SymFunc, convert

BASIS_LETTER = {"monomial": "m", "homogeneous": "h", "powersum": "p", "schur": "s"}

ENV_BUDGET = "BELLSYM_BUDGET"


def _default_budget() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return speciesmod.DEFAULT_OBJECT_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
        return value
    except ValueError:
        raise SystemExit(f"invalid {ENV_BUDGET}={raw!r}: must be a positive integer")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _subscript(lam) -> str:
    text = ",".join(str(p) for p in lam)
    return text if len(text) == 1 else "{" + text + "}"


def _coeff_prefix(c: Fraction) -> str:
    if c.denominator == 1:
        return "" if c == 1 else str(c)
    return f"({c})"


def render_symfunc(F: SymFunc, ascending: bool = True) -> str:
    """Human form like "2s_{2,2} + 2s_{3,1} + 5s_4"; "0" when empty."""
    if F.is_zero():
        return "0"
    letter = BASIS_LETTER[F.basis]
    items = sorted(
        F.terms.items(),
        key=lambda kv: (size(kv[0]), kv[0] if ascending else tuple(-p for p in kv[0])),
    )
    pieces = []
    for lam, c in items:
        c = Fraction(c)
        body = str(abs(c)) if not lam else _coeff_prefix(abs(c)) + letter + "_" + _subscript(lam)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# bell
# ---------------------------------------------------------------------------


def cmd_bell(args) -> int:
    routes = [args.route] if args.route != "all" else ["tower", "plethystic", "monomial-recursion", "powersum-recursion"]
    if args.route == "all" and args.order == 1:
        routes.append("convolution")
    tables = [bellmod.bell_table(args.order, args.degree, r) for r in routes]
    reference = tables[0]
    agreement = True
    for table in tables[1:]:
        for n in range(args.degree + 1):
            if table.bell(n) != reference.bell(n):
                agreement = False
                print(
                    f"ROUTE DISAGREEMENT at n={n}: {table.route} differs from {reference.route}",
                    file=sys.stderr,
                )
    functions = [convert(reference.bell(n), args.basis) for n in range(args.degree + 1)]

    if args.format == "json":
        payload = {
            "command": "bell",
            "order": args.order,
            "degree": args.degree,
            "basis": args.basis,
            "routes": routes,
            "routes_agree": agreement,
            "functions": [
                {"n": n, "symfunc": functions[n].to_json_dict()}
                for n in range(args.degree + 1)
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "tsv":
        for n, F in enumerate(functions):
            for lam, c in F.sorted_terms():
                print(f"{n}\t{format_partition(lam)}\t{c}")
    else:
        for n, F in enumerate(functions):
            print(f"B_{n}: {render_symfunc(F)}")
        if args.route == "all":
            print("routes checked: " + ", ".join(routes))
            print("route agreement: " + ("yes" if agreement else "NO"))
    return 0 if agreement else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    m, N, budget = args.order, args.degree, args.budget
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool, str]] = []

    def run(name: str, fn) -> None:
        ok, detail = fn()
        checks.append((name, ok, detail))

    # refuse early if the species enumerations cannot fit the budget
    worst = max(speciesmod.expected_count(m, n) for n in range(N + 1))
    if worst > budget:
        raise BudgetExceededError(
            f"verification at order {m}, degree {N} needs {worst} objects; budget is {budget}"
        )

    reference = bellmod.bell_tower(m, N)

    def route_agreement():
        others = [
            bellmod.bell_plethystic_recursion(m, N),
            bellmod.bell_monomial_recursion(m, N),
            bellmod.bell_powersum_recursion(m, N),
        ]
        if m == 1:
            others.append(bellmod.bell_convolution(N))
        for table in others:
            for n in range(N + 1):
                if table.bell(n) != reference.bell(n):
                    return False, f"{table.route} differs at n={n}"
        return True, f"{len(others) + 1} routes"

    def bellnum_egf():
        for n in range(N + 1):
            try:
                bellmod.bell_number(m, n)
            except CrossCheckError as exc:
                return False, str(exc)
        return True, f"n <= {N}"

    def psi_egf():
        ok = bellmod.psi_matches_egf(m, N, reference)
        return ok, f"n <= {N}"

    def species_count():
        for n in range(N + 1):
            got = len(speciesmod.enumerate_hyperpartitions(m, n, budget))
            expect = bellmod.egf_bell_numbers(m, n)[n]
            if got != expect:
                return False, f"count {got} != {expect} at n={n}"
        return True, f"n <= {N}"

    def frobenius():
        for n in range(N + 1):
            if speciesmod.frobenius_oracle(m, n, budget) != reference.bell(n).degree_part(n):
                return False, f"mismatch at n={n}"
        return True, f"n <= {N}"

    def orbit_rho():
        for n in range(N + 1):
            for lam in partitions_of(n):
                if speciesmod.orbit_count(m, lam, budget) != bellmod.rho_recursion(m, lam):
                    return False, f"mismatch at {lam}"
        return True, f"n <= {N}"

    def fixed_beta():
        for n in range(N + 1):
            for lam in partitions_of(n):
                if speciesmod.fixed_points_of_type(m, lam, budget) != bellmod.beta_recursion(m, lam):
                    return False, f"mismatch at {lam}"
        return True, f"n <= {N}"

    def type_invariance():
        for n in range(2, min(N, 5) + 1):
            for lam in partitions_of(n):
                base = speciesmod.PermutationAction.from_cycle_type(lam)
                shuffled = list(range(1, n + 1))
                rng.shuffle(shuffled)
                tau = speciesmod.PermutationAction(n, tuple(shuffled))
                other = base.conjugate_by(tau)
                if speciesmod.fixed_points(m, base, budget) != speciesmod.fixed_points(m, other, budget):
                    return False, f"cycle type {lam}"
        return True, "sampled conjugates"

    run("route-agreement", route_agreement)
    run("bell-number-vs-egf", bellnum_egf)
    run("psi-vs-egf", psi_egf)
    run("species-count", species_count)
    run("frobenius-characteristic", frobenius)
    run("orbits-vs-monomial-coeffs", orbit_rho)
    run("fixed-points-vs-powersum-coeffs", fixed_beta)
    run("fixed-points-type-invariance", type_invariance)

    width = max(len(name) for name, _, _ in checks)
    for name, ok, detail in checks:
        print(f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}  {detail}")
    failures = [name for name, ok, _ in checks if not ok]
    if failures:
        print(f"FAILED: {failures[0]}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# restriction
# ---------------------------------------------------------------------------


def cmd_restriction(args) -> int:
    lam = parse_partition(args.lam)
    horizon = args.horizon if args.horizon is not None else max(2 * size(lam), 10)
    horizon = max(horizon, size(lam) + 1)
    report = restmod.build_report(lam, horizon, args.budget)
    taub = restmod.tauberian_check(lam, horizon, args.budget)

    if args.format == "tsv":
        print(report.tsv_row())
    elif args.format == "json":
        payload = {
            "command": "restriction",
            "lambda": format_partition(lam),
            "poly_coeffs": [str(c) for c in report.poly.coeffs],
            "coefficients": list(report.coeffs),
            "residue": report.residue,
            "stabilization_index": report.stabilization_index,
            "cesaro_bound_constant": str(taub.bound_constant),
            "cesaro_bound_holds": taub.bound_holds,
            "cesaro_converged": taub.converged,
            "cesaro_last_average": str(taub.averages[-1]),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"lambda = ({format_partition(lam)})")
        print(f"(1-z) * R(z) = {report.poly.pretty()}")
        print(f"A = {report.residue}")
        print(f"stabilization index = {report.stabilization_index}")
        shown = min(len(report.coeffs), max(report.stabilization_index + 3, 8))
        stream = ",".join(str(c) for c in report.coeffs[:shown])
        print(f"r_0..r_{shown - 1} = {stream},...")
        print(f"cesaro bound constant C = {taub.bound_constant}  (|avg_n - A| <= C/n)")
        trace_points = [1, 2, 5, 10, horizon]
        seen = set()
        for npt in trace_points:
            if 1 <= npt <= horizon and npt not in seen:
                seen.add(npt)
                print(f"  avg_{npt} = {taub.averages[npt - 1]}")
        print(f"bound holds: {'yes' if taub.bound_holds else 'NO'}")
        print(f"converges to A: {'yes' if taub.converged else 'NO'}")
    return 0


# ---------------------------------------------------------------------------
# hfun / bellnum / dominance-report / species-dump
# ---------------------------------------------------------------------------


def cmd_hfun(args) -> int:
    functions = [bellmod.h_function_monomial(n) for n in range(1, args.degree + 1)]
    if args.format == "json":
        payload = {
            "command": "hfun",
            "degree": args.degree,
            "functions": [
                {"n": n + 1, "symfunc": F.to_json_dict()} for n, F in enumerate(functions)
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "tsv":
        for n, F in enumerate(functions):
            for lam, c in F.sorted_terms():
                print(f"{n + 1}\t{format_partition(lam)}\t{c}")
    else:
        for n, F in enumerate(functions):
            print(f"H_{n + 1}: {render_symfunc(F, ascending=False)}")
    return 0


def cmd_bellnum(args) -> int:
    values = bellmod.egf_bell_numbers(args.order, args.nmax)
    # certify the symmetric-function route on the same range
    for n in range(args.nmax + 1):
        bellmod.bell_number(args.order, n)
    if args.format == "json":
        print(json.dumps({"command": "bellnum", "order": args.order, "values": list(values)}))
    elif args.format == "tsv":
        for n, v in enumerate(values):
            print(f"{n}\t{v}")
    else:
        print(",".join(str(v) for v in values))
    return 0


def cmd_dominance_report(args) -> int:
    table = bellmod.bell_tower(args.order, args.degree)
    print("dominance-order Schur coefficient comparisons -- OBSERVATION ONLY, not asserted")
    for n in range(1, args.degree + 1):
        parts = partitions_of(n)
        for i, mu in enumerate(parts):
            for lam in parts[i + 1 :]:
                if dominates(mu, lam):
                    a_lo = table.schur_coeff(lam)
                    a_hi = table.schur_coeff(mu)
                    tag = "<=" if a_lo <= a_hi else ">  (monotonicity NOT observed)"
                    print(
                        f"n={n}: A({format_partition(lam)}) = {a_lo} {tag} "
                        f"A({format_partition(mu)}) = {a_hi}"
                    )
    return 0


def cmd_species_dump(args) -> int:
    structures = speciesmod.enumerate_hyperpartitions(args.order, args.size, args.budget)
    text = speciesmod.dump_tsv(structures)
    if text:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellsym",
        description="Exact computations with higher-order Bell symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "json", "tsv"), default="plain")

    def add_budget(p):
        p.add_argument("--budget", type=int, default=_default_budget(),
                       help="enumeration budget (objects/nodes)")

    p = sub.add_parser("bell", help="print Bell functions B_0..B_N")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--basis", choices=("monomial", "homogeneous", "powersum", "schur"),
                   default="homogeneous")
    p.add_argument("--route",
                   choices=("tower", "plethystic", "monomial-recursion",
                            "powersum-recursion", "convolution", "all"),
                   default="tower")
    add_format(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("verify", help="run the cross-route and oracle suite")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    add_budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("restriction", help="restriction series report for one partition")
    p.add_argument("--lambda", dest="lam", required=True,
                   help='partition as "a,b,c"; empty string for the empty partition')
    p.add_argument("--horizon", type=int, default=None)
    add_format(p)
    add_budget(p)
    p.set_defaults(func=cmd_restriction)

    p = sub.add_parser("hfun", help="print the divisor-sum functions H_1..H_N")
    p.add_argument("--degree", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_hfun)

    p = sub.add_parser("bellnum", help="print higher-order Bell numbers")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_bellnum)

    p = sub.add_parser("dominance-report",
                       help="observed dominance-order comparisons of Schur coefficients")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_dominance_report)

    p = sub.add_parser("species-dump", help="TSV dump of hyper-partitions")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    add_budget(p)
    p.set_defaults(func=cmd_species_dump)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr in ("order", "degree", "nmax", "size", "horizon"):
        value = getattr(args, attr, None)
        if value is not None and value < 0:
            parser.error(f"--{attr} must be nonnegative")
    if getattr(args, "budget", 1) < 1:
        parser.error("--budget must be at least 1")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except CrossCheckError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
