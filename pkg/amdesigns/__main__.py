"""Command line entry point for amdesigns.

Every subcommand builds a :class:`~amdesigns.io.reports.Report` and writes it
to stdout as Markdown or, with ``--json``, as a versioned JSON envelope.
Diagnostics go to stderr through logging. Exit codes: 0 success, 2 usage or
precondition error, 3 anomaly (a computed result contradicting a proven
statement).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .am import (
    THEOREM_ALIASES,
    THEOREM_IDS,
    am_condition,
    verify_am_guarantee,
    verify_theorem_instance,
)
from .codes import (
    LinearCode,
    build_fixture,
    dual,
    is_self_orthogonal,
    list_available_fixtures,
    weight_distribution,
)
from .criteria import (
    check_conjecture_identity,
    check_remark2_identity,
    diophantine_scan,
    scan_criterion,
)
from .designs import delta_and_s, is_t_design, support_design
from .errors import AMDesignsError, NotApplicable
from .formatting import exact
from .harmonic import (
    dual_transform,
    harm_basis,
    harmonic_design_check,
    harmonic_enumerator,
    proportionality,
    solve_five_weight_relations,
)
from .io import Report, export_fixture, load_code_file, render_code_file, render_json, render_markdown
from .logging.console import configure_logger, log_error, log_info, log_warning
from .settings import AnalysisSettings

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_ANOMALY = 3


@dataclass(slots=True)
class Outcome:
    """A report plus whether it records an anomaly."""

    report: Report
    anomaly: bool = False


def _resolve_code(args: argparse.Namespace) -> LinearCode:
    if args.code is not None:
        return load_code_file(args.code)
    if args.fixture is not None:
        return build_fixture(args.fixture)
    raise ValueError("a code is required: pass --code PATH or --fixture NAME")


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc


def run_analyze(code: LinearCode, settings: AnalysisSettings) -> Outcome:
    """Weights, distances, δ and s for C and C^⊥."""

    options = {"budget": settings.budget, "workers": settings.workers}
    dual_code = dual(code)
    primal = weight_distribution(code, **options)
    dual_side = weight_distribution(dual_code, **options)
    strengths = {
        "C": delta_and_s(code, settings.t_max_probe, **options),
        "C_perp": delta_and_s(dual_code, settings.t_max_probe, **options),
    }
    payload = {
        "code": code.to_dict(),
        "d": exact(primal.minimum_distance),
        "d_dual": exact(dual_side.minimum_distance),
        "self_orthogonal": is_self_orthogonal(code),
        "distribution": primal.to_dict(),
        "dual_distribution": dual_side.to_dict(),
        "strength": {side: report.to_dict() for side, report in strengths.items()},
        "delta_below_s": {side: bool(report.gap_weights) for side, report in strengths.items()},
    }
    for side, report in strengths.items():
        if report.cap_hit:
            log_warning(f"{side}: some weight reached the probe cap t = {report.t_max_probe}")
    return Outcome(Report("analyze", payload))


def run_design(code: LinearCode, settings: AnalysisSettings, *, weight: int, t: int) -> Outcome:
    design = support_design(code, weight, budget=settings.budget, workers=settings.workers)
    verdict = is_t_design(design, t)
    log_info(verdict.to_markdown())
    payload = {"code": code.label, "design": design.to_dict(), "verdict": verdict.to_dict()}
    return Outcome(Report("design", payload))


def run_am(code: LinearCode, settings: AnalysisSettings, *, verify: bool = False) -> Outcome:
    report = am_condition(code, budget=settings.budget, workers=settings.workers)
    payload: dict = {"code": code.label, "am": report.to_dict()}
    anomaly = False
    if verify:
        if report.t is None:
            log_warning(f"{code.label} does not satisfy the AM-condition; nothing to verify")
        else:
            guarantee = verify_am_guarantee(
                code, report, budget=settings.budget, workers=settings.workers
            )
            payload["verification"] = guarantee.to_dict()
            anomaly = not guarantee.holds
    return Outcome(Report("am", payload), anomaly=anomaly)


def run_theorem(code: LinearCode, settings: AnalysisSettings, *, theorem_id: str) -> Outcome:
    verdict = verify_theorem_instance(
        code, theorem_id, budget=settings.budget, workers=settings.workers
    )
    log_info(verdict.to_markdown())
    payload = {"code": code.label, "verdict": verdict.to_dict()}
    return Outcome(Report("theorem", payload), anomaly=not verdict.consistent)


def run_harmonic(
    code: LinearCode,
    settings: AnalysisSettings,
    *,
    k: int,
    index: int = 0,
    weight: int | None = None,
    t: int | None = None,
) -> Outcome:
    """Harmonic enumerators of C and C^⊥ for one basis function of ``Harm_k``.

    With ``weight`` and ``t`` the harmonic design test is run as well and
    compared with the counting verdict.
    """

    options = {"budget": settings.budget, "workers": settings.workers}
    basis = harm_basis(
        code.n, k, max_degree=settings.harmonic_max_degree, size_cap=settings.harmonic_size_cap
    )
    if not 0 <= index < len(basis):
        raise ValueError(f"basis index must lie in 0..{len(basis) - 1}, got {index}")
    f = basis[index]
    primal = harmonic_enumerator(code, f, **options)
    dual_side = harmonic_enumerator(dual(code), f, **options)
    transformed = dual_transform(primal, code.modulus)
    relation = proportionality(transformed, dual_side)
    payload: dict = {
        "code": code.label,
        "k": exact(k),
        "dimension": exact(len(basis)),
        "basis_index": exact(index),
        "enumerator": primal.to_dict(),
        "dual_enumerator": dual_side.to_dict(),
        "transformed": transformed.to_dict(),
        "proportionality": relation.to_dict(),
    }
    anomaly = not relation.proportional
    if anomaly:
        log_error(f"ANOMALY: transformed harmonic enumerator of {code.label} is not proportional")
    if weight is not None or t is not None:
        if weight is None or t is None:
            raise ValueError("--weight and --t must be given together")
        by_harmonics = harmonic_design_check(
            code,
            weight,
            t,
            max_degree=settings.harmonic_max_degree,
            size_cap=settings.harmonic_size_cap,
            **options,
        )
        by_counting = is_t_design(support_design(code, weight, **options), t).is_design
        payload["design_check"] = {
            "weight": exact(weight),
            "t": exact(t),
            "harmonic": by_harmonics,
            "counting": by_counting,
        }
        if by_harmonics != by_counting:
            log_error(
                f"ANOMALY: harmonic test says {by_harmonics}, counting says {by_counting} "
                f"for D_{weight} of {code.label} at t = {t}"
            )
            anomaly = True
    return Outcome(Report("harmonic", payload), anomaly=anomaly)


def run_criterion(code: LinearCode, settings: AnalysisSettings) -> Outcome:
    report = scan_criterion(code, budget=settings.budget, workers=settings.workers)
    payload = {"code": code.label, "criterion": report.to_dict()}
    return Outcome(Report("criterion", payload), anomaly=bool(report.anomalies))


def run_identity(code: LinearCode, settings: AnalysisSettings) -> Outcome:
    options = {"budget": settings.budget, "workers": settings.workers}
    payload: dict = {"code": code.label}
    anomaly = False
    try:
        check = check_remark2_identity(code, **options)
    except NotApplicable as exc:
        log_warning(str(exc))
        payload["identity"] = None
    else:
        payload["identity"] = check.to_dict()
        anomaly = check.applicable and not check.holds
    payload["conjecture"] = check_conjecture_identity(code, **options).to_dict()
    return Outcome(Report("identity", payload), anomaly=anomaly)


def run_diophantine(*, q: int, ell: int, n_max: int) -> Outcome:
    solutions = diophantine_scan(q, ell, n_max)
    payload = {
        "q": exact(q),
        "ell": exact(ell),
        "n_max": exact(n_max),
        "solutions": [solution.to_dict() for solution in solutions],
    }
    return Outcome(Report("diophantine", payload))


def run_relations(
    *,
    n: int,
    k: int,
    q: int,
    weights: Sequence[int],
    dual_zero_weights: Sequence[int],
) -> Outcome:
    report = solve_five_weight_relations(n, k, q, weights, dual_zero_weights)
    return Outcome(Report("relations", report.to_dict()))


def run_fixtures(
    names: Sequence[str], *, export_dir: Path | None = None, as_json: bool = False
) -> str:
    """Built-in generator matrices as code files (or JSON when requested)."""

    if export_dir is not None:
        for name in names:
            log_info(f"Fixture exported: {export_fixture(name, export_dir)}")
    codes = [build_fixture(name) for name in names]
    if as_json:
        return render_json(Report("fixtures", {code.label: code.to_dict() for code in codes}))
    return "\n".join(render_code_file(code) for code in codes)


def _add_common(parser: argparse.ArgumentParser, *, needs_code: bool) -> None:
    if needs_code:
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--code", type=Path, help="Generator matrix file (.code or JSON).")
        source.add_argument(
            "--fixture", choices=list_available_fixtures(), help="Built-in Golay code."
        )
    parser.add_argument("--budget", type=int, help="Largest number of codewords to enumerate.")
    parser.add_argument("--workers", type=int, help="Threads used for enumeration.")
    parser.add_argument("--t-max", dest="t_max", type=int, help="Highest t probed for δ and s.")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR.")
    parser.add_argument("--json", action="store_true", help="Emit the JSON report envelope.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amdesigns",
        description="Assmus-Mattson analysis and support designs of linear codes over GF(p)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze_parser = subparsers.add_parser(
        "analyze", help="Weight distributions, d, d_dual, delta and s."
    )
    _add_common(analyze_parser, needs_code=True)

    design_parser = subparsers.add_parser("design", help="Test whether D_w is a t-design.")
    _add_common(design_parser, needs_code=True)
    design_parser.add_argument("--weight", type=int, required=True)
    design_parser.add_argument("--t", type=int, required=True)

    am_parser = subparsers.add_parser("am", help="Evaluate the Assmus-Mattson condition.")
    _add_common(am_parser, needs_code=True)
    am_parser.add_argument(
        "--verify",
        action="store_true",
        help="Check every support design at the reported t by counting.",
    )

    theorem_parser = subparsers.add_parser(
        "theorem", help="Check a code against a two- or three-weight theorem."
    )
    _add_common(theorem_parser, needs_code=True)
    theorem_parser.add_argument(
        "--id",
        dest="theorem_id",
        choices=THEOREM_IDS + tuple(THEOREM_ALIASES),
        required=True,
        help="Theorem id (1.1, 1.2, 1.3) or its descriptive alias.",
    )

    harmonic_parser = subparsers.add_parser(
        "harmonic", help="Harmonic weight enumerators and their dual transform."
    )
    _add_common(harmonic_parser, needs_code=True)
    harmonic_parser.add_argument("--k", type=int, required=True, help="Harmonic degree.")
    harmonic_parser.add_argument("--index", type=int, default=0, help="Basis function index.")
    harmonic_parser.add_argument("--weight", type=int)
    harmonic_parser.add_argument("--t", type=int)

    criterion_parser = subparsers.add_parser(
        "criterion", help="Binomial-sum criterion for d_dual - t in {1, 2, 3}."
    )
    _add_common(criterion_parser, needs_code=True)

    identity_parser = subparsers.add_parser(
        "identity", help="Sphere-sum identities of two- and three-weight codes."
    )
    _add_common(identity_parser, needs_code=True)

    diophantine_parser = subparsers.add_parser(
        "diophantine", help="Scan n for sphere sums equal to a power of q."
    )
    _add_common(diophantine_parser, needs_code=False)
    diophantine_parser.add_argument("--q", type=int, required=True)
    diophantine_parser.add_argument("--ell", type=int, required=True)
    diophantine_parser.add_argument("--nmax", dest="n_max", type=int, required=True)

    relations_parser = subparsers.add_parser(
        "relations", help="Solve the reduced-polynomial relations of the five-weight example."
    )
    _add_common(relations_parser, needs_code=False)
    relations_parser.add_argument("--n", type=int, default=18)
    relations_parser.add_argument("--k", type=int, default=2)
    relations_parser.add_argument("--q", type=int, default=3)
    relations_parser.add_argument("--weights", type=_weights, default=(6, 9, 12, 15))
    relations_parser.add_argument(
        "--dual-zero", dest="dual_zero", type=_weights, default=(2, 3, 5)
    )

    fixtures_parser = subparsers.add_parser(
        "fixtures", help="Print the built-in generator matrices as code files."
    )
    _add_common(fixtures_parser, needs_code=True)
    fixtures_parser.add_argument("--export", type=Path, help="Also write <name>.code files here.")

    return parser


def _settings(args: argparse.Namespace) -> AnalysisSettings:
    return AnalysisSettings.from_env().with_overrides(
        budget=args.budget,
        workers=args.workers,
        t_max_probe=args.t_max,
        log_level=args.log_level,
    )


def _dispatch(args: argparse.Namespace, settings: AnalysisSettings) -> Outcome:
    if args.command == "diophantine":
        return run_diophantine(q=args.q, ell=args.ell, n_max=args.n_max)
    if args.command == "relations":
        return run_relations(
            n=args.n, k=args.k, q=args.q, weights=args.weights, dual_zero_weights=args.dual_zero
        )
    code = _resolve_code(args)
    if args.command == "analyze":
        return run_analyze(code, settings)
    if args.command == "design":
        return run_design(code, settings, weight=args.weight, t=args.t)
    if args.command == "am":
        return run_am(code, settings, verify=args.verify)
    if args.command == "theorem":
        return run_theorem(code, settings, theorem_id=args.theorem_id)
    if args.command == "harmonic":
        return run_harmonic(code, settings, k=args.k, index=args.index, weight=args.weight, t=args.t)
    if args.command == "criterion":
        return run_criterion(code, settings)
    if args.command == "identity":
        return run_identity(code, settings)
    raise ValueError(f"Unknown command: {args.command}")


def main(argv: list[str] | None = None) -> int:
    """Entrypoint used by ``python -m amdesigns``; returns the exit code."""

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = _settings(args)
        configure_logger(settings.log_level, log_file=settings.log_file)
        if args.command == "fixtures":
            if args.code is not None:
                raise ValueError("fixtures takes --fixture NAME, not --code")
            names = [args.fixture] if args.fixture else list_available_fixtures()
            sys.stdout.write(run_fixtures(names, export_dir=args.export, as_json=args.json))
            if args.json:
                sys.stdout.write("\n")
            return EXIT_OK
        outcome = _dispatch(args, settings)
    except (AMDesignsError, ValueError, FileNotFoundError) as exc:
        log_error(f"{type(exc).__name__}: {exc}")
        return EXIT_PRECONDITION

    rendered = render_json(outcome.report) if args.json else render_markdown(outcome.report)
    sys.stdout.write(rendered + "\n")
    return EXIT_ANOMALY if outcome.anomaly else EXIT_OK


if __name__ == "__main__":  # pragma: no cover - CLI entry
    raise SystemExit(main())
