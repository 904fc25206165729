"""Command-line surface: read a problem document, run one check, report.

Every subcommand reads a sectioned key/value document, runs one
computation, and emits a single report — the same sectioned text format by
default, JSON with ``--json``.  Reports are deterministic: identical input
and flags give byte-identical output.  Exit status is 0 for a passing (or
not-applicable) check, 1 for a failing one, and 2 for any input problem:
unreadable file, malformed document, ill-posed germ.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .blowup import (
    MAX_BLOWUPS_DEFAULT,
    BlowupLimitError,
    IrrationalSingularPointError,
    dicritical_report,
    reduce_germ,
)
from .documents import (
    DocumentError,
    load_local_problem,
    load_projective_problem,
    parse_document,
    render_document,
)
from .germs import (
    excess_polar,
    generic_polar,
    intersection_multiplicity,
    milnor_foliation,
    multiplicity,
    probe_pencil,
    tangency_excess,
    tjurina_foliation,
    validate_balanced,
)
from .localalg import TruncationError, stabilized_macaulay_dim
from .projective import check_form, check_global_bound, validate_form
from .theorems import (
    FAIL,
    PASS,
    CheckReport,
    check_briancon_skoda,
    check_cota,
    check_liu,
    check_second_type,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folgerm",
        description="exact local and projective invariants of plane foliations",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("document", help="problem description file")
        cmd.add_argument(
            "--param",
            action="append",
            default=[],
            metavar="NAME=VALUE",
            help="set a rational parameter (repeatable, overrides the file)",
        )
        cmd.add_argument(
            "--json", action="store_true", help="emit the report as JSON"
        )
        cmd.add_argument(
            "--out",
            metavar="PATH",
            help="write the report to PATH instead of standard output",
        )
        return cmd

    def add_probes(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument(
            "--probes",
            type=int,
            default=7,
            metavar="K",
            help="number of pencil directions tried for the polar (default 7)",
        )

    def add_blowups(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument(
            "--max-blowups",
            type=int,
            default=MAX_BLOWUPS_DEFAULT,
            metavar="N",
            help="abort reduction after N blow-ups (default %(default)s)",
        )

    inv = add("invariants", "table of local invariants of a foliation germ")
    add_probes(inv)
    inv.add_argument(
        "--truncation-cap",
        type=int,
        default=64,
        metavar="N",
        help="cap for the truncated-series dimension oracle (default 64)",
    )
    add("check-bs", "membership of the squared zero divisor in the germ ideal")
    add("check-liu", "tau <= mu <= 2*tau sandwich for second-type germs")
    cota = add("check-cota", "balanced-divisor lower bound for mu and 2*tau")
    add_probes(cota)
    second = add("check-second-type", "absence of tangent saddle-nodes")
    second.add_argument(
        "--mode",
        choices=("criterion", "reduction", "both"),
        default="both",
        help="decide by the multiplicity criterion, by reduction, or both",
    )
    add_blowups(second)
    red = add("reduce", "reduction of singularities by point blow-ups")
    add_blowups(red)
    add("projective-validate", "Euler relation, degree, and singular points")
    add("projective-global", "global Tjurina bound for an invariant curve")
    return parser


def _parse_overrides(pairs: list[str]) -> dict[str, Fraction]:
    overrides = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        name = name.strip()
        if not sep or not name:
            raise DocumentError(f"--param needs NAME=VALUE, got {pair!r}")
        try:
            overrides[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(
                f"--param {name}: {value.strip()!r} is not a rational number"
            ) from exc
    return overrides


def _require_divisor(problem):
    if problem.divisor is None:
        raise DocumentError("this check needs a [divisor] section")
    return problem.divisor


def _cmd_invariants(problem, args) -> CheckReport:
    germ = problem.germ
    mu = milnor_foliation(germ)
    data = {"multiplicity": multiplicity(germ), "mu": mu}
    notes = []
    oracle = stabilized_macaulay_dim(
        [germ.P, germ.Q], cap=args.truncation_cap
    )
    data["mu_oracle"] = oracle
    verdict = PASS
    if oracle != mu:
        verdict = FAIL
        notes.append(
            "standard-basis and truncated-series dimensions disagree; "
            "this is an engine inconsistency"
        )
    if problem.divisor is not None:
        b = problem.divisor
        validate_balanced(germ, b)
        data["nu_zero"] = b.zero.order
        data["nu_pole"] = b.pole.order if b.pole is not None else 0
        data["nu_signed"] = b.signed_multiplicity
        data["tau"] = tjurina_foliation(germ, b.zero)
        against = [b.zero] + ([b.pole] if b.pole is not None else [])
        cert = generic_polar(germ, probe_pencil(args.probes), against=against)
        data["polar_probe"] = list(cert.probe)
        data["polar_certified"] = cert.certified
        if b.pole is not None:
            data["i_polar_pole"] = intersection_multiplicity(
                cert.polar.poly, b.pole.poly
            )
            data["i_zero_pole"] = intersection_multiplicity(
                b.zero.poly, b.pole.poly
            )
        delta = excess_polar(germ, b, polar=cert.polar)
        xi = tangency_excess(germ, b)
        data["delta"] = delta
        data["xi"] = xi
        data["generalized_curve"] = delta == 0
        data["second_type"] = xi == 0
        if not cert.certified:
            notes.append("polar genericity attained by a single probe only")
    return CheckReport("invariants", verdict, data, notes)


def _cmd_reduce(problem, args) -> CheckReport:
    try:
        result = reduce_germ(problem.germ, max_blowups=args.max_blowups)
    except IrrationalSingularPointError as exc:
        return CheckReport(
            "reduce",
            FAIL,
            {"residual": str(exc.residual), "certified": exc.certified},
            [str(exc)],
        )
    except BlowupLimitError as exc:
        return CheckReport("reduce", FAIL, {}, [str(exc)])
    singularities = []
    for sing in result.singularities:
        singularities.append(
            {
                "components": list(sing.components),
                "kind": sing.kind,
                "ratio": None if sing.ratio is None else str(sing.ratio),
                "weak_along_divisor": sing.weak_along_divisor,
            }
        )
    data = {
        "blowups": result.blowups,
        "components": [
            {"index": c.index, "dicritical": c.dicritical, "epsilon": c.epsilon}
            for c in result.components
        ],
        "edges": [list(edge) for edge in result.edges],
        "singularities": singularities,
        "dicritical": result.dicritical,
        "dicritical_budgets": dicritical_report(result),
        "second_type": result.second_type,
        "generalized_curve": result.generalized_curve,
    }
    return CheckReport("reduce", PASS, data)


def _dispatch(args, sections, overrides) -> CheckReport:
    if args.command in (
        "invariants",
        "check-bs",
        "check-liu",
        "check-cota",
        "check-second-type",
        "reduce",
    ):
        problem = load_local_problem(sections, overrides)
        if args.command == "invariants":
            return _cmd_invariants(problem, args)
        if args.command == "reduce":
            return _cmd_reduce(problem, args)
        divisor = _require_divisor(problem)
        if args.command == "check-bs":
            return check_briancon_skoda(problem.germ, divisor)
        if args.command == "check-liu":
            return check_liu(problem.germ, divisor)
        if args.command == "check-cota":
            return check_cota(problem.germ, divisor, probe_pencil(args.probes))
        return check_second_type(
            problem.germ, divisor, mode=args.mode, max_blowups=args.max_blowups
        )
    problem = load_projective_problem(sections, overrides)
    if args.command == "projective-validate":
        return check_form(
            *problem.coefficients, curve=problem.curve, points=problem.points
        )
    form = validate_form(*problem.coefficients)
    if problem.curve is None:
        raise DocumentError("projective-global needs a curve key")
    return check_global_bound(form, problem.curve, problem.points)


def _json_default(value):
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"not serializable: {value!r}")


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, str, Fraction)):
        return str(value)
    return json.dumps(value, default=_json_default)


def render_text(report: CheckReport) -> str:
    sections = {"report": {"check": report.name, "verdict": report.verdict}}
    if report.data:
        sections["data"] = {
            key: _format_value(value) for key, value in report.data.items()
        }
    if report.notes:
        sections["notes"] = {
            str(i): note for i, note in enumerate(report.notes, start=1)
        }
    return render_document(sections)


def render_json(report: CheckReport) -> str:
    payload = {
        "check": report.name,
        "verdict": report.verdict,
        "data": report.data,
        "notes": report.notes,
    }
    return json.dumps(payload, indent=2, default=_json_default) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        overrides = _parse_overrides(args.param)
        try:
            with open(args.document, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise DocumentError(f"cannot read {args.document}: {exc}") from exc
        sections = parse_document(text)
        report = _dispatch(args, sections, overrides)
    except (DocumentError, TruncationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    output = render_json(report) if args.json else render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
