"""Benefit formulas and the shared projection entry point.

Two benefit rules:

* OPS pays half the last drawn salary as a direct-benefit pension.
* NPS pays a level perpetuity on the annuity principal: the corpus is
  split, and the pension is principal × annuity rate / 12 with the
  principal preserved.  The perpetuity reading is forced by the
  published arithmetic (₹4,00,11,947 × 0.08/12 reproduces the published
  pension to the rupee); an amortizing annuity would not.

:func:`project` assembles either scheme into a :class:`ProjectionResult`
and is the single computation path behind the CLI, the HTTP service and
the sweeps — they may not disagree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from . import presets
from .corpus import (
    CompoundingConvention,
    CorpusBreakdown,
    DEFAULT_CONVENTION,
    accumulate,
    split_corpus,
)
from .errors import DomainError
from .jsonutil import expect_mapping, expect_str
from .money import Money, Period, Rate, RateKind, round_half_up
from .salary import EmployeeProfile, IndexingMode, build_contribution_series, future_value

GRATUITY_CAP = Money.from_rupees(2_000_000)


class Scheme(enum.Enum):
    OPS = "OPS"
    NPS = "NPS"


def ops_pension(last_drawn: Money) -> Money:
    """Direct-benefit pension: 50% of the last drawn salary, rupee-rounded."""
    if last_drawn.amount_paise < 0:
        raise DomainError("last drawn salary must be non-negative")
    return (last_drawn * Rate.from_percent("50", kind=RateKind.RATIO)).round_to_rupees()


def annuity_pension(principal: Money, annuity_rate: Rate) -> Money:
    """Monthly perpetuity payout: principal × rate / 12, rupee-rounded."""
    return _annuity_pension_exact(principal, annuity_rate).round_to_rupees()


def _annuity_pension_exact(principal: Money, annuity_rate: Rate) -> Money:
    if annuity_rate.period is not Period.PER_YEAR:
        raise ValueError("annuity rate must be PerYear")
    return principal * annuity_rate.value / 12


def replacement_ratio(pension: Money, last_drawn: Money) -> Rate:
    """Pension as a fraction of the last drawn salary."""
    if last_drawn.amount_paise <= 0:
        raise DomainError("replacement ratio needs a positive last drawn salary")
    return Rate(pension / last_drawn, Period.PER_YEAR, RateKind.RATIO)


def gratuity_cap(amount: Money) -> Money:
    """Clamp a gratuity amount to the statutory ₹20 lakh ceiling."""
    if amount.amount_paise < 0:
        raise DomainError("gratuity amount must be non-negative")
    return min(amount, GRATUITY_CAP)


@dataclass(frozen=True, slots=True)
class Overrides:
    """Optional scenario knobs on top of a profile; None means default."""

    annual_return: Rate | None = None
    annuity_share: Rate | None = None
    annuity_rate: Rate | None = None
    convention: CompoundingConvention | None = None
    indexing_mode: IndexingMode | None = None
    pinned_corpus: Money | None = None

    def to_json(self) -> dict:
        out: dict = {}
        if self.annual_return is not None:
            out["annual_return"] = self.annual_return.to_json()
        if self.annuity_share is not None:
            out["annuity_share"] = self.annuity_share.to_json()
        if self.annuity_rate is not None:
            out["annuity_rate"] = self.annuity_rate.to_json()
        if self.convention is not None:
            out["convention"] = self.convention.to_json()
        if self.indexing_mode is not None:
            out["indexing_mode"] = self.indexing_mode.value
        if self.pinned_corpus is not None:
            out["pinned_corpus"] = self.pinned_corpus.to_json()
        return out

    @classmethod
    def from_json(cls, obj: object, *, field: str = "overrides") -> "Overrides":
        from .errors import ValidationError

        data = expect_mapping(
            obj,
            set(),
            optional={
                "annual_return",
                "annuity_share",
                "annuity_rate",
                "convention",
                "indexing_mode",
                "pinned_corpus",
            },
            field=field,
        )
        kwargs: dict = {}
        if "annual_return" in data:
            kwargs["annual_return"] = Rate.from_json(data["annual_return"], field=f"{field}.annual_return")
        if "annuity_share" in data:
            share = Rate.from_json(data["annuity_share"], field=f"{field}.annuity_share")
            if share.value > 1:
                raise ValidationError.single(f"{field}.annuity_share", "must be at most 100%")
            kwargs["annuity_share"] = share
        if "annuity_rate" in data:
            kwargs["annuity_rate"] = Rate.from_json(data["annuity_rate"], field=f"{field}.annuity_rate")
        if "convention" in data:
            kwargs["convention"] = CompoundingConvention.from_json(
                data["convention"], field=f"{field}.convention"
            )
        if "indexing_mode" in data:
            raw = expect_str(data["indexing_mode"], field=f"{field}.indexing_mode")
            try:
                kwargs["indexing_mode"] = IndexingMode(raw)
            except ValueError:
                raise ValidationError.single(
                    f"{field}.indexing_mode",
                    f"expected one of {', '.join(m.value for m in IndexingMode)}, got {raw!r}",
                ) from None
        if "pinned_corpus" in data:
            kwargs["pinned_corpus"] = Money.from_json(data["pinned_corpus"], field=f"{field}.pinned_corpus")
        return cls(**kwargs)


@dataclass(frozen=True, slots=True)
class ProjectionResult:
    """One scheme's projected benefit for one profile.

    Pension and salary are carried both exact (for downstream precision)
    and presentation-rounded; the replacement ratio is computed from the
    exact values.  NPS results always carry a corpus breakdown, OPS
    results never do.
    """

    scheme: Scheme
    monthly_pension: Money
    monthly_pension_exact: Money
    last_drawn_salary: Money
    last_drawn_salary_exact: Money
    replacement_ratio: Rate
    profile: EmployeeProfile
    convention: CompoundingConvention
    breakdown: CorpusBreakdown | None = field(default=None)

    def __post_init__(self) -> None:
        if self.scheme is Scheme.NPS and self.breakdown is None:
            raise ValueError("NPS results carry a corpus breakdown")
        if self.scheme is Scheme.OPS and self.breakdown is not None:
            raise ValueError("OPS results carry no corpus breakdown")

    def to_json(self) -> dict:
        out = {
            "scheme": self.scheme.value,
            "monthly_pension": self.monthly_pension.to_json(),
            "monthly_pension_unrounded_paise": round_half_up(self.monthly_pension_exact.amount_paise),
            "last_drawn_salary": self.last_drawn_salary.to_json(),
            "last_drawn_salary_unrounded_paise": round_half_up(
                self.last_drawn_salary_exact.amount_paise
            ),
            "replacement_ratio": self.replacement_ratio.to_json(),
            "profile": self.profile.to_json(),
            "convention": self.convention.to_json(),
            "breakdown": self.breakdown.to_json() if self.breakdown else None,
        }
        return out


def resolve_overrides(overrides: Overrides | None) -> Overrides:
    """Fill in engine defaults for any knob left unset."""
    overrides = overrides or Overrides()
    return replace(
        overrides,
        annual_return=overrides.annual_return or presets.DEFAULT_ANNUAL_RETURN,
        annuity_share=overrides.annuity_share or presets.DEFAULT_ANNUITY_SHARE,
        annuity_rate=overrides.annuity_rate or presets.DEFAULT_ANNUITY_RATE,
        convention=overrides.convention or DEFAULT_CONVENTION,
        indexing_mode=overrides.indexing_mode or IndexingMode.FLAT,
    )


def project(
    profile: EmployeeProfile, scheme: Scheme, overrides: Overrides | None = None
) -> ProjectionResult:
    """Project one scheme's benefit for a profile under the given knobs."""
    knobs = resolve_overrides(overrides)
    last_drawn_exact = future_value(profile.gross_salary, profile.combined_growth, profile.tenure_years)
    last_drawn = last_drawn_exact.round_to_rupees()

    if scheme is Scheme.OPS:
        pension_exact = last_drawn_exact * Rate.from_percent("50", kind=RateKind.RATIO)
        return ProjectionResult(
            scheme=Scheme.OPS,
            monthly_pension=pension_exact.round_to_rupees(),
            monthly_pension_exact=pension_exact,
            last_drawn_salary=last_drawn,
            last_drawn_salary_exact=last_drawn_exact,
            replacement_ratio=replacement_ratio(pension_exact, last_drawn_exact)
            if last_drawn_exact.amount_paise > 0
            else Rate.zero(kind=RateKind.RATIO),
            profile=profile,
            convention=knobs.convention,
        )

    if knobs.pinned_corpus is not None:
        corpus = knobs.pinned_corpus
    else:
        series = build_contribution_series(profile, knobs.indexing_mode)
        corpus = accumulate(series, knobs.annual_return, knobs.convention)
    breakdown = split_corpus(corpus, knobs.annuity_share, knobs.convention)
    pension_exact = _annuity_pension_exact(breakdown.annuity_principal, knobs.annuity_rate)
    ratio = (
        replacement_ratio(pension_exact, last_drawn_exact)
        if last_drawn_exact.amount_paise > 0
        else Rate.zero(kind=RateKind.RATIO)
    )
    return ProjectionResult(
        scheme=Scheme.NPS,
        monthly_pension=pension_exact.round_to_rupees(),
        monthly_pension_exact=pension_exact,
        last_drawn_salary=last_drawn,
        last_drawn_salary_exact=last_drawn_exact,
        replacement_ratio=ratio,
        profile=profile,
        convention=knobs.convention,
        breakdown=breakdown,
    )


def parse_scheme(raw: str, *, field: str = "scheme") -> Scheme:
    from .errors import ValidationError

    for member in Scheme:
        if member.value.lower() == raw.lower():
            return member
    raise ValidationError.single(field, f"expected OPS or NPS, got {raw!r}")
