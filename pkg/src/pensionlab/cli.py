"""Command-line front door.

Subcommands: `project` (one projection), `sweep` (parameter grids with
CSV export), `reproduce-paper` (regenerate the benchmark tables and
check them against the published figures), `serve` (run the HTTP
service).

Rupee flags take whole rupees, percent flags take percent units
(`--return 9` means 9% a year).  Exit codes: 0 success, 1 engine or I/O
error, 2 flag validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path

from . import benchmarks, presets
from .benefits import Overrides, ProjectionResult, Scheme, parse_scheme, project
from .corpus import CompoundingConvention, Timing
from .errors import DomainError, PensionLabError, ValidationError
from .money import Money, Period, Rate, RateBasis, RateKind, format_indian
from .portfolio import lifecycle_fund
from .salary import EmployeeProfile, IndexingMode
from .sweeps import (
    SweepTable,
    SweptParameter,
    compare_ops_nps,
    sweep_annuity_share,
    sweep_employer_rate,
    sweep_expected_return,
    sweep_lifecycle,
    table_to_csv,
)

_CONVENTION_BASES = {
    "nominal-monthly": RateBasis.NOMINAL_MONTHLY,
    "effective-annual": RateBasis.EFFECTIVE_ANNUAL,
}
_CONVENTION_TIMINGS = {"due": Timing.DUE, "ordinary": Timing.ORDINARY}


def _decimal_arg(raw: str, what: str) -> Decimal:
    try:
        value = Decimal(raw)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"{what} must be a decimal number, got {raw!r}")
    if not value.is_finite():
        raise argparse.ArgumentTypeError(f"{what} must be finite")
    return value


def rupees_arg(raw: str) -> Money:
    value = _decimal_arg(raw, "amount")
    if value < 0:
        raise argparse.ArgumentTypeError("amount must be non-negative")
    return Money.from_rupees(value)


def _percent_arg(raw: str, *, maximum: Decimal | None, kind: RateKind) -> Rate:
    value = _decimal_arg(raw, "percentage")
    if value < 0:
        raise argparse.ArgumentTypeError("percentage must be non-negative")
    if maximum is not None and value > maximum:
        raise argparse.ArgumentTypeError(f"percentage must be at most {maximum}")
    return Rate.from_percent(value, Period.PER_YEAR, kind)


def percent_arg(raw: str) -> Rate:
    return _percent_arg(raw, maximum=None, kind=RateKind.RETURN)


def share_arg(raw: str) -> Rate:
    return _percent_arg(raw, maximum=Decimal(100), kind=RateKind.RATIO)


def da_arg(raw: str) -> Rate:
    return _percent_arg(raw, maximum=None, kind=RateKind.DA)


def contrib_arg(raw: str) -> Rate:
    return _percent_arg(raw, maximum=Decimal(100), kind=RateKind.CONTRIBUTION)


def convention_arg(raw: str) -> CompoundingConvention:
    basis_part, _, timing_part = raw.lower().partition("+")
    basis = _CONVENTION_BASES.get(basis_part)
    if basis is None:
        raise argparse.ArgumentTypeError(
            f"unknown convention {raw!r}; expected nominal-monthly or effective-annual, "
            "optionally with +due or +ordinary"
        )
    timing = Timing.DUE
    if timing_part:
        timing = _CONVENTION_TIMINGS.get(timing_part)
        if timing is None:
            raise argparse.ArgumentTypeError(f"unknown timing {timing_part!r}; expected due or ordinary")
    return CompoundingConvention(basis, timing)


def mode_arg(raw: str) -> IndexingMode:
    lowered = raw.lower().replace("_", "-")
    if lowered == "flat":
        return IndexingMode.FLAT
    if lowered in ("wage-indexed", "wageindexed"):
        return IndexingMode.WAGE_INDEXED
    raise argparse.ArgumentTypeError(f"unknown mode {raw!r}; expected flat or wage-indexed")


def _add_profile_flags(parser: argparse.ArgumentParser) -> None:
    ref = presets.REFERENCE_PROFILE
    group = parser.add_argument_group("profile")
    group.add_argument("--basic", type=rupees_arg, default=ref.basic_pay, help="monthly basic pay in rupees")
    group.add_argument("--da", type=da_arg, default=ref.da_rate, metavar="PCT", help="DA as percent of basic")
    group.add_argument("--gross", type=rupees_arg, default=ref.gross_salary, help="present monthly gross salary in rupees")
    group.add_argument("--growth", type=percent_arg, default=ref.combined_growth, metavar="PCT", help="combined annual salary growth percent")
    group.add_argument("--employee-rate", type=contrib_arg, default=ref.employee_contrib, metavar="PCT", help="employee contribution percent of basic+DA")
    group.add_argument("--employer-rate", type=contrib_arg, default=ref.employer_contrib, metavar="PCT", help="employer contribution percent of basic+DA")
    group.add_argument("--age", type=int, default=ref.appointment_age, help="age at appointment")
    group.add_argument("--retire-age", type=int, default=ref.retirement_age, help="age at superannuation")
    group.add_argument("--years", type=int, default=None, help="tenure in years (overrides --retire-age)")


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("scenario")
    group.add_argument("--return", dest="annual_return", type=percent_arg, default=None, metavar="PCT", help="expected annual return percent (default 9)")
    group.add_argument("--annuity-share", type=share_arg, default=None, metavar="PCT", help="share of corpus annuitized (default 75)")
    group.add_argument("--annuity-rate", type=percent_arg, default=None, metavar="PCT", help="annual annuity payout percent (default 8)")
    group.add_argument("--convention", type=convention_arg, default=None, metavar="NAME", help="compounding convention, e.g. nominal-monthly+due")
    group.add_argument("--mode", type=mode_arg, default=None, help="contribution indexing: flat or wage-indexed")
    group.add_argument("--pin-corpus", type=rupees_arg, default=None, metavar="RUPEES", help="skip accumulation and use this corpus")


def _profile_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> EmployeeProfile:
    retire_age = args.retire_age
    if args.years is not None:
        if args.years <= 0:
            parser.error("--years must be positive")
        retire_age = args.age + args.years
    try:
        return EmployeeProfile(
            appointment_age=args.age,
            retirement_age=retire_age,
            basic_pay=args.basic,
            da_rate=Rate(args.da.value, Period.PER_YEAR, RateKind.DA),
            gross_salary=args.gross,
            combined_growth=Rate(args.growth.value, Period.PER_YEAR, RateKind.GROWTH),
            employee_contrib=args.employee_rate,
            employer_contrib=args.employer_rate,
        )
    except ValidationError as exc:
        parser.error(str(exc))


def _overrides_from_args(args: argparse.Namespace) -> Overrides:
    return Overrides(
        annual_return=args.annual_return,
        annuity_share=args.annuity_share,
        annuity_rate=args.annuity_rate,
        convention=args.convention,
        indexing_mode=args.mode,
        pinned_corpus=args.pin_corpus,
    )


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))


def _format_result_table(result: ProjectionResult) -> str:
    lines = [
        ("Scheme", result.scheme.value),
        ("Convention", result.convention.label()),
        ("Last drawn salary", result.last_drawn_salary.format_inr() + " p.m."),
        ("Monthly pension", result.monthly_pension.format_inr()),
        ("Replacement ratio", result.replacement_ratio.as_percent_str()),
    ]
    if result.breakdown is not None:
        b = result.breakdown
        lines += [
            ("Corpus", b.corpus.round_to_rupees().format_inr()),
            (f"Lumpsum ({b.lumpsum_share.as_percent_str(0)})", b.lumpsum.format_inr()),
            ("Annuity principal", b.annuity_principal.round_to_rupees().format_inr()),
        ]
    width = max(len(label) for label, _ in lines)
    return "\n".join(f"{label.ljust(width)}  {value}" for label, value in lines)


def _format_sweep_table(table: SweepTable) -> str:
    show_return = any(row.derived_return is not None for row in table.rows)
    header = ["value", "pension", "corpus", "replacement"]
    if show_return:
        header.insert(1, "return")
    rows = [header]
    for row in table.rows:
        if not row.ok:
            cells = [row.value_label, f"error: {row.error}", "", ""]
        else:
            r = row.result
            corpus = r.breakdown.corpus.round_to_rupees().format_inr() if r.breakdown else ""
            cells = [
                row.value_label,
                r.monthly_pension.format_inr(),
                corpus,
                r.replacement_ratio.as_percent_str(),
            ]
        if show_return:
            cells.insert(1, row.derived_return.as_percent_str() if row.derived_return else "")
        rows.append(cells)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)


def _cmd_project(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    profile = _profile_from_args(parser, args)
    overrides = _overrides_from_args(args)
    scheme = parse_scheme(args.scheme)
    result = project(profile, scheme, overrides)
    if args.json:
        _print_json(result.to_json())
    else:
        print(_format_result_table(result))
    return 0


_PARAM_NAMES = {
    "annuity-share": SweptParameter.ANNUITY_SHARE,
    "employer-rate": SweptParameter.EMPLOYER_RATE,
    "lifecycle": SweptParameter.LIFECYCLE_FUND,
    "return": SweptParameter.EXPECTED_RETURN,
}


def _cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    profile = _profile_from_args(parser, args)
    overrides = _overrides_from_args(args)
    parameter = _PARAM_NAMES[args.param]
    entries = [entry.strip() for entry in args.grid.split(",") if entry.strip()]
    if not entries:
        parser.error("--grid must list at least one value")
    try:
        if parameter is SweptParameter.LIFECYCLE_FUND:
            funds = [lifecycle_fund(entry) for entry in entries]
            table = sweep_lifecycle(profile, funds, overrides)
        else:
            kinds = {
                SweptParameter.ANNUITY_SHARE: share_arg,
                SweptParameter.EMPLOYER_RATE: contrib_arg,
                SweptParameter.EXPECTED_RETURN: percent_arg,
            }
            grid = [kinds[parameter](entry) for entry in entries]
            if parameter is SweptParameter.ANNUITY_SHARE:
                table = sweep_annuity_share(profile, grid, overrides)
            elif parameter is SweptParameter.EMPLOYER_RATE:
                table = sweep_employer_rate(profile, grid, overrides=overrides)
            else:
                table = sweep_expected_return(profile, grid, overrides)
    except (ValidationError, ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    if args.csv:
        Path(args.csv).write_text(table_to_csv(table), encoding="utf-8", newline="")
        print(f"wrote {args.csv}", file=sys.stderr)
    elif args.json:
        _print_json(table.to_json())
    else:
        print(_format_sweep_table(table))
    return 0


def _cmd_reproduce(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    convention = args.convention or CompoundingConvention()
    out_dir = Path(args.out)
    checks = benchmarks.run_reference_checks(convention)
    overrides = Overrides(convention=convention)

    ref = presets.REFERENCE_PROFILE
    share_grid = [Rate.from_percent(p, kind=RateKind.RATIO) for p in presets.ANNUITY_SHARE_GRID]
    employer_grid = [contrib_arg(p) for p in presets.EMPLOYER_RATE_GRID]
    funds = [lifecycle_fund(name) for name in presets.LIFECYCLE_ORDER]
    tables = {
        "fig1_lifecycle.csv": sweep_lifecycle(ref, funds, overrides),
        "fig2_annuity_share.csv": sweep_annuity_share(ref, share_grid, overrides),
        "fig3_employer_rate.csv": sweep_employer_rate(ref, employer_grid, overrides=overrides),
    }
    comparison = compare_ops_nps(
        ref, Overrides(convention=convention, pinned_corpus=presets.HEADLINE_CORPUS)
    )

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, table in tables.items():
            (out_dir / name).write_text(table_to_csv(table), encoding="utf-8", newline="")
        (out_dir / "ops_vs_nps.json").write_text(
            json.dumps(comparison.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        summary = "\n".join(check.summary_line() for check in checks) + "\n"
        (out_dir / "summary.txt").write_text(summary, encoding="utf-8")
        (out_dir / "summary.json").write_text(
            json.dumps([check.to_json() for check in checks], indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    except OSError as exc:
        print(f"error: cannot write into {out_dir}: {exc}", file=sys.stderr)
        return 1

    print(summary, end="")
    failed = [check for check in checks if not check.passed]
    if failed:
        print(f"{len(failed)} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _cmd_serve(_: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    from . import service

    service.run(addr=args.addr, data_path=args.data)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pensionlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_project = sub.add_parser("project", help="project one scheme's benefit")
    p_project.add_argument("--scheme", required=True, choices=["ops", "nps", "OPS", "NPS"])
    _add_profile_flags(p_project)
    _add_scenario_flags(p_project)
    p_project.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p_project.set_defaults(func=_cmd_project)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter over a grid")
    p_sweep.add_argument("--param", required=True, choices=sorted(_PARAM_NAMES))
    p_sweep.add_argument("--grid", required=True, help="comma-separated grid values")
    _add_profile_flags(p_sweep)
    _add_scenario_flags(p_sweep)
    p_sweep.add_argument("--csv", metavar="PATH", help="write the sweep as CSV to PATH")
    p_sweep.add_argument("--json", action="store_true")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_repro = sub.add_parser(
        "reproduce-paper", help="regenerate benchmark tables and check published figures"
    )
    p_repro.add_argument("--out", default="paper_tables", help="output directory")
    p_repro.add_argument("--convention", type=convention_arg, default=None)
    p_repro.set_defaults(func=_cmd_reproduce)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--addr", default=None, help="bind address HOST:PORT")
    p_serve.add_argument("--data", default=None, help="scenario persistence file")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PensionLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
