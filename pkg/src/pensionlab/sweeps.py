"""Parameter sweeps and the OPS-vs-NPS comparison report.

Each sweep recomputes a full projection per grid point rather than
scaling a base row, so linearity in contributions or shares stays a
testable engine fact instead of a baked-in assumption.  Failed rows are
reported in place, never dropped.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from typing import Sequence

from ._version import ENGINE_VERSION
from .benefits import Overrides, ProjectionResult, Scheme, project, resolve_overrides
from .corpus import CompoundingConvention
from .errors import DomainError, FieldError, ValidationError
from .jsonutil import expect_list, expect_mapping, expect_str
from .money import Money, Rate, RateKind, round_half_up
from .portfolio import LifecycleFund, greedy_allocate, lifecycle_fund, weighted_return
from .salary import EmployeeProfile

CSV_HEADER = ("parameter", "value", "pension_rupees", "pension_paise", "corpus_paise", "replacement_ratio")


class SweptParameter(enum.Enum):
    ANNUITY_SHARE = "AnnuityShare"
    EMPLOYER_RATE = "EmployerRate"
    LIFECYCLE_FUND = "LifecycleFund"
    EXPECTED_RETURN = "ExpectedReturn"


_GRID_KIND = {
    SweptParameter.ANNUITY_SHARE: RateKind.RATIO,
    SweptParameter.EMPLOYER_RATE: RateKind.CONTRIBUTION,
    SweptParameter.EXPECTED_RETURN: RateKind.RETURN,
}


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """A base profile, the parameter to sweep, and its grid."""

    base: EmployeeProfile
    parameter: SweptParameter
    grid: tuple
    overrides: Overrides = Overrides()

    def __post_init__(self) -> None:
        object.__setattr__(self, "grid", tuple(self.grid))
        if not self.grid:
            raise ValidationError.single("grid", "must be non-empty")
        if self.parameter is SweptParameter.LIFECYCLE_FUND:
            if not all(isinstance(v, LifecycleFund) for v in self.grid):
                raise ValidationError.single("grid", "lifecycle grid entries must be fund names")
            names = [f.name for f in self.grid]
            if len(set(names)) != len(names):
                raise ValidationError.single("grid", "lifecycle funds must be distinct")
            return
        if not all(isinstance(v, Rate) for v in self.grid):
            raise ValidationError.single("grid", "grid entries must be rates")
        values = [v.value for v in self.grid]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValidationError.single("grid", "must be strictly increasing")
        if self.parameter in (SweptParameter.ANNUITY_SHARE, SweptParameter.EMPLOYER_RATE):
            if values[-1] > 1:
                raise ValidationError.single("grid", "values must be at most 100%")

    def to_json(self) -> dict:
        if self.parameter is SweptParameter.LIFECYCLE_FUND:
            grid = [f.name.value for f in self.grid]
        else:
            grid = [r.as_decimal_str() for r in self.grid]
        out = {"base": self.base.to_json(), "parameter": self.parameter.value, "grid": grid}
        overrides = self.overrides.to_json()
        if overrides:
            out["overrides"] = overrides
        return out

    @classmethod
    def from_json(cls, obj: object, *, field: str = "body") -> "SweepSpec":
        data = expect_mapping(obj, {"base", "parameter", "grid"}, optional={"overrides"}, field=field)
        raw_param = expect_str(data["parameter"], field=f"{field}.parameter")
        try:
            parameter = SweptParameter(raw_param)
        except ValueError:
            allowed = ", ".join(p.value for p in SweptParameter)
            raise ValidationError.single(
                f"{field}.parameter", f"expected one of {allowed}, got {raw_param!r}"
            ) from None
        base = EmployeeProfile.from_json(data["base"], field=f"{field}.base")
        raw_grid = expect_list(data["grid"], field=f"{field}.grid")
        grid: list = []
        errors: list[FieldError] = []
        for idx, entry in enumerate(raw_grid):
            where = f"{field}.grid[{idx}]"
            if not isinstance(entry, str):
                errors.append(FieldError(where, "must be a string"))
                continue
            try:
                if parameter is SweptParameter.LIFECYCLE_FUND:
                    grid.append(lifecycle_fund(entry))
                else:
                    grid.append(Rate(_parse_decimal(entry, where), kind=_GRID_KIND[parameter]))
            except (ValueError, ValidationError) as exc:
                errors.append(FieldError(where, str(exc)))
        if errors:
            raise ValidationError(errors)
        overrides = Overrides.from_json(data.get("overrides", {}), field=f"{field}.overrides")
        return cls(base=base, parameter=parameter, grid=tuple(grid), overrides=overrides)


def _parse_decimal(raw: str, where: str):
    from .money import exact_fraction

    return exact_fraction(raw, field=where)


@dataclass(frozen=True, slots=True)
class SweepRow:
    value_label: str
    ok: bool
    result: ProjectionResult | None = None
    error: str | None = None
    derived_return: Rate | None = None

    def to_json(self) -> dict:
        out: dict = {"value": self.value_label, "ok": self.ok}
        if self.ok:
            out["result"] = self.result.to_json()
        else:
            out["error"] = self.error
        if self.derived_return is not None:
            out["derived_return"] = self.derived_return.to_json()
        return out


@dataclass(frozen=True, slots=True)
class SweepTable:
    parameter: SweptParameter
    rows: tuple[SweepRow, ...]
    convention: CompoundingConvention
    engine_version: str = ENGINE_VERSION
    generated_at: str = ""

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter.value,
            "convention": self.convention.to_json(),
            "engine_version": self.engine_version,
            "generated_at": self.generated_at,
            "rows": [row.to_json() for row in self.rows],
        }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _evaluate_row(
    profile: EmployeeProfile,
    overrides: Overrides,
    label: str,
    derived_return: Rate | None = None,
) -> SweepRow:
    try:
        result = project(profile, Scheme.NPS, overrides)
    except DomainError as exc:
        return SweepRow(value_label=label, ok=False, error=str(exc), derived_return=derived_return)
    return SweepRow(value_label=label, ok=True, result=result, derived_return=derived_return)


def sweep_annuity_share(
    base: EmployeeProfile, grid: Sequence[Rate], overrides: Overrides | None = None
) -> SweepTable:
    """Pension across annuity shares of the corpus."""
    spec = SweepSpec(base, SweptParameter.ANNUITY_SHARE, tuple(grid), overrides or Overrides())
    return run_sweep(spec)


def sweep_employer_rate(
    base: EmployeeProfile,
    grid: Sequence[Rate],
    annuity_share: Rate | None = None,
    overrides: Overrides | None = None,
) -> SweepTable:
    """Pension across employer contribution rates at a fixed annuity share."""
    overrides = overrides or Overrides()
    if annuity_share is not None:
        overrides = replace(overrides, annuity_share=annuity_share)
    spec = SweepSpec(base, SweptParameter.EMPLOYER_RATE, tuple(grid), overrides)
    return run_sweep(spec)


def sweep_lifecycle(
    base: EmployeeProfile, funds: Sequence[LifecycleFund], overrides: Overrides | None = None
) -> SweepTable:
    """Full projection per lifecycle fund at its greedy-fill expected return."""
    spec = SweepSpec(base, SweptParameter.LIFECYCLE_FUND, tuple(funds), overrides or Overrides())
    return run_sweep(spec)


def sweep_expected_return(
    base: EmployeeProfile, grid: Sequence[Rate], overrides: Overrides | None = None
) -> SweepTable:
    """Pension across assumed annual investment returns."""
    spec = SweepSpec(base, SweptParameter.EXPECTED_RETURN, tuple(grid), overrides or Overrides())
    return run_sweep(spec)


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate a sweep row by row; rows are independent full projections."""
    rows: list[SweepRow] = []
    for value in spec.grid:
        if spec.parameter is SweptParameter.ANNUITY_SHARE:
            rows.append(
                _evaluate_row(spec.base, replace(spec.overrides, annuity_share=value), value.as_decimal_str())
            )
        elif spec.parameter is SweptParameter.EMPLOYER_RATE:
            profile = spec.base.with_employer_contrib(value)
            rows.append(_evaluate_row(profile, spec.overrides, value.as_decimal_str()))
        elif spec.parameter is SweptParameter.EXPECTED_RETURN:
            rows.append(
                _evaluate_row(spec.base, replace(spec.overrides, annual_return=value), value.as_decimal_str())
            )
        else:
            try:
                fund_return = weighted_return(greedy_allocate(value.equity_cap))
            except DomainError as exc:
                rows.append(SweepRow(value_label=value.name.value, ok=False, error=str(exc)))
                continue
            rows.append(
                _evaluate_row(
                    spec.base,
                    replace(spec.overrides, annual_return=fund_return),
                    value.name.value,
                    derived_return=fund_return,
                )
            )
    convention = resolve_overrides(spec.overrides).convention
    return SweepTable(
        parameter=spec.parameter, rows=tuple(rows), convention=convention, generated_at=_now()
    )


def table_to_csv(table: SweepTable) -> str:
    """RFC 4180 CSV: rounded rupees alongside unrounded paise per row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(CSV_HEADER)
    for row in table.rows:
        if not row.ok:
            writer.writerow([table.parameter.value, row.value_label, "", "", "", ""])
            continue
        result = row.result
        corpus_paise = (
            round_half_up(result.breakdown.corpus.amount_paise) if result.breakdown else ""
        )
        writer.writerow(
            [
                table.parameter.value,
                row.value_label,
                result.monthly_pension.rupee_value(),
                round_half_up(result.monthly_pension_exact.amount_paise),
                corpus_paise,
                result.replacement_ratio.as_decimal_str(),
            ]
        )
    return buffer.getvalue()


@dataclass(frozen=True, slots=True)
class ComparisonReport:
    """OPS and NPS side by side for the same profile."""

    ops: ProjectionResult
    nps: ProjectionResult
    pension_gap: Money

    def to_json(self) -> dict:
        return {
            "ops": self.ops.to_json(),
            "nps": self.nps.to_json(),
            "pension_gap": self.pension_gap.to_json(),
        }


def compare_ops_nps(base: EmployeeProfile, overrides: Overrides | None = None) -> ComparisonReport:
    """Project both schemes with shared inputs and report the gap."""
    ops = project(base, Scheme.OPS, overrides)
    nps = project(base, Scheme.NPS, overrides)
    return ComparisonReport(ops=ops, nps=nps, pension_gap=ops.monthly_pension - nps.monthly_pension)
