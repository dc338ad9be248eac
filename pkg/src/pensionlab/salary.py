"""Salary level and contribution base over a career.

The engine models salary growth with a single combined annual rate
applied multiplicatively to the gross salary (annual increment plus
average DA drift folded together).  Contribution streams come in two
indexing modes: Flat (the calibration that matches the published corpus
figures) and WageIndexed (an honest wage-growing stream, stepping up on
each 12-month anniversary).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError, ValidationError
from .jsonutil import expect_int, expect_mapping
from .money import Money, Period, Rate, RateKind

MIN_AGE = 18
MAX_AGE = 75


class IndexingMode(enum.Enum):
    FLAT = "Flat"
    WAGE_INDEXED = "WageIndexed"


@dataclass(frozen=True, slots=True)
class EmployeeProfile:
    """Career and contribution assumptions for one employee.

    ``basic_pay`` and ``gross_salary`` are monthly amounts; ``da_rate``
    is a fraction of basic; contribution rates apply to basic plus DA.
    """

    appointment_age: int
    retirement_age: int
    basic_pay: Money
    da_rate: Rate
    gross_salary: Money
    combined_growth: Rate
    employee_contrib: Rate
    employer_contrib: Rate

    def __post_init__(self) -> None:
        errors: list[FieldError] = []
        for name in ("appointment_age", "retirement_age"):
            age = getattr(self, name)
            if isinstance(age, bool) or not isinstance(age, int):
                errors.append(FieldError(name, "must be an integer"))
            elif not MIN_AGE <= age <= MAX_AGE:
                errors.append(FieldError(name, f"must be in [{MIN_AGE}, {MAX_AGE}]"))
        if not errors and self.appointment_age >= self.retirement_age:
            errors.append(FieldError("retirement_age", "must exceed appointment_age"))
        for name in ("employee_contrib", "employer_contrib"):
            rate = getattr(self, name)
            if rate.value > 1:
                errors.append(FieldError(name, "must be at most 100%"))
        for name in ("basic_pay", "gross_salary"):
            if getattr(self, name).amount_paise < 0:
                errors.append(FieldError(name, "must be non-negative"))
        if self.combined_growth.period is not Period.PER_YEAR:
            errors.append(FieldError("combined_growth", "must be a PerYear rate"))
        if errors:
            raise ValidationError(errors)

    @property
    def tenure_years(self) -> int:
        return self.retirement_age - self.appointment_age

    @property
    def tenure_months(self) -> int:
        return self.tenure_years * 12

    @property
    def total_contrib(self) -> Rate:
        return self.employee_contrib + self.employer_contrib

    def with_employer_contrib(self, rate: Rate) -> "EmployeeProfile":
        return EmployeeProfile(
            appointment_age=self.appointment_age,
            retirement_age=self.retirement_age,
            basic_pay=self.basic_pay,
            da_rate=self.da_rate,
            gross_salary=self.gross_salary,
            combined_growth=self.combined_growth,
            employee_contrib=self.employee_contrib,
            employer_contrib=rate,
        )

    def to_json(self) -> dict:
        return {
            "appointment_age": self.appointment_age,
            "retirement_age": self.retirement_age,
            "basic_pay": self.basic_pay.to_json(),
            "da_rate": self.da_rate.to_json(),
            "gross_salary": self.gross_salary.to_json(),
            "combined_growth": self.combined_growth.to_json(),
            "employee_contrib": self.employee_contrib.to_json(),
            "employer_contrib": self.employer_contrib.to_json(),
        }

    @classmethod
    def from_json(cls, obj: object, *, field: str = "profile") -> "EmployeeProfile":
        data = expect_mapping(
            obj,
            {
                "appointment_age",
                "retirement_age",
                "basic_pay",
                "da_rate",
                "gross_salary",
                "combined_growth",
                "employee_contrib",
                "employer_contrib",
            },
            field=field,
        )
        return cls(
            appointment_age=expect_int(data["appointment_age"], field=f"{field}.appointment_age"),
            retirement_age=expect_int(data["retirement_age"], field=f"{field}.retirement_age"),
            basic_pay=Money.from_json(data["basic_pay"], field=f"{field}.basic_pay"),
            da_rate=Rate.from_json(data["da_rate"], field=f"{field}.da_rate"),
            gross_salary=Money.from_json(data["gross_salary"], field=f"{field}.gross_salary"),
            combined_growth=Rate.from_json(data["combined_growth"], field=f"{field}.combined_growth"),
            employee_contrib=Rate.from_json(data["employee_contrib"], field=f"{field}.employee_contrib"),
            employer_contrib=Rate.from_json(data["employer_contrib"], field=f"{field}.employer_contrib"),
        )


@dataclass(frozen=True, slots=True)
class ContributionSeries:
    """Ordered monthly contribution amounts for a whole career."""

    monthly_amounts: tuple[Money, ...]
    indexing_mode: IndexingMode

    def __post_init__(self) -> None:
        if not self.monthly_amounts:
            raise ValueError("contribution series must be non-empty")
        object.__setattr__(self, "monthly_amounts", tuple(self.monthly_amounts))
        if self.indexing_mode is IndexingMode.FLAT:
            first = self.monthly_amounts[0]
            if any(m != first for m in self.monthly_amounts):
                raise ValueError("Flat series must have identical entries")
        else:
            pairs = zip(self.monthly_amounts, self.monthly_amounts[1:])
            if any(later < earlier for earlier, later in pairs):
                raise ValueError("WageIndexed series must be non-decreasing")

    def __len__(self) -> int:
        return len(self.monthly_amounts)

    def total(self) -> Money:
        return sum(self.monthly_amounts, Money.zero())

    def scaled(self, factor: Fraction) -> "ContributionSeries":
        return ContributionSeries(
            tuple(m * factor for m in self.monthly_amounts), self.indexing_mode
        )


def future_value(present: Money, rate: Rate, years: int) -> Money:
    """Compound a present amount: present × (1 + rate)^years, exact."""
    if isinstance(years, bool) or not isinstance(years, int):
        raise TypeError("years must be an integer")
    if years < 0:
        raise ValueError("years must be non-negative")
    if rate.period is not Period.PER_YEAR:
        raise ValueError("future_value requires a PerYear rate")
    return present * (1 + rate.value) ** years


def contribution_base(basic: Money, da_rate: Rate) -> Money:
    """Basic pay plus dearness allowance: the base contribution rates apply to."""
    return basic * (1 + da_rate.value)


def monthly_contribution(profile: EmployeeProfile) -> Money:
    """Combined employee+employer contribution on the first month's base."""
    return contribution_base(profile.basic_pay, profile.da_rate) * profile.total_contrib


def build_contribution_series(
    profile: EmployeeProfile, mode: IndexingMode = IndexingMode.FLAT
) -> ContributionSeries:
    """Monthly contribution amounts over the whole tenure.

    Flat keeps the first month's contribution for every month.
    WageIndexed steps the amount up by the combined growth rate on each
    12-month anniversary (months 12, 24, ...), matching annual pay
    revision practice.
    """
    base = monthly_contribution(profile)
    months = profile.tenure_months
    if mode is IndexingMode.FLAT:
        return ContributionSeries((base,) * months, mode)
    growth = 1 + profile.combined_growth.value
    amounts = tuple(base * growth ** (month // 12) for month in range(months))
    return ContributionSeries(amounts, mode)
