"""Published benchmark figures and the checks behind `reproduce-paper`.

Each check runs the real engine against a published figure at a pinned
tolerance.  The headline-corpus check is special: the published corpus
is not exactly reproducible under any stated convention, so the check
reports the per-convention deltas and passes when they stay inside the
documented bands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import presets
from .benefits import Overrides, Scheme, annuity_pension, ops_pension, project
from .corpus import CompoundingConvention, DEFAULT_CONVENTION, Timing, accumulate, split_corpus
from .money import Money, Rate, RateBasis, RateKind, round_half_up
from .portfolio import greedy_allocate, lifecycle_fund, weighted_return
from .salary import build_contribution_series, future_value
from .sweeps import sweep_annuity_share, sweep_employer_rate

# Published whole-rupee figures.
FV_SALARY_RUPEES = 2_245_536
OPS_PENSION_RUPEES = 1_122_768
HEADLINE_CORPUS_RUPEES = 53_349_262
HEADLINE_LUMPSUM_RUPEES = 13_337_315
HEADLINE_ANNUITY_RUPEES = 40_011_947
HEADLINE_PENSION_RUPEES = 266_746
FIG2_SHARE40_RUPEES = 151_117
FIG2_SHARE80_RUPEES = 302_233
FIG3_EMPLOYER17_RUPEES = 318_732
REPLACEMENT_RATIO_PERCENT = Fraction("14.19")

LIFECYCLE_RETURNS = {
    "Default": Fraction("0.079"),
    "Conservative": Fraction("0.082"),
    "Moderate": Fraction("0.0895"),
    "Aggressive": Fraction("0.095"),
}

# Documented per-convention bands for the headline corpus delta.
HEADLINE_BAND = {
    RateBasis.EFFECTIVE_ANNUAL: Fraction("0.035"),
    RateBasis.NOMINAL_MONTHLY: Fraction("0.07"),
}

HEADLINE_NOTE = (
    "published headline corpus is not exactly reproducible under any stated "
    "convention; deltas are reported per convention against documented bands"
)


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    expected: str
    actual: str
    delta: str
    tolerance: str
    passed: bool
    informational: bool = False
    note: str | None = None

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{self.name} {self.expected}: {status} "
            f"(actual {self.actual}, delta {self.delta}, tol {self.tolerance})"
        )
        if self.note:
            line += f" [{self.note}]"
        return line

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "delta": self.delta,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "informational": self.informational,
            "note": self.note,
        }


def _rupee_check(name: str, expected: int, actual: Money, tol_rupees: int) -> CheckResult:
    actual_rupees = actual.rupee_value()
    delta = actual_rupees - expected
    return CheckResult(
        name=name,
        expected=str(expected),
        actual=str(actual_rupees),
        delta=f"{delta:+d}",
        tolerance=f"±{tol_rupees}",
        passed=abs(delta) <= tol_rupees,
    )


def _relative_check(name: str, expected: int, actual: Money, tol: Fraction) -> CheckResult:
    actual_rupees = actual.rupee_value()
    rel = Fraction(actual_rupees - expected, expected)
    return CheckResult(
        name=name,
        expected=str(expected),
        actual=str(actual_rupees),
        delta=f"{float(rel):+.4%}",
        tolerance=f"±{float(tol):.1%}",
        passed=abs(rel) <= tol,
    )


def run_reference_checks(
    convention: CompoundingConvention = DEFAULT_CONVENTION,
) -> list[CheckResult]:
    """Run every benchmark check under the given convention."""
    profile = presets.REFERENCE_PROFILE
    checks: list[CheckResult] = []

    # Direct-benefit chain.
    last_drawn = future_value(profile.gross_salary, profile.combined_growth, profile.tenure_years)
    checks.append(_rupee_check("FV salary", FV_SALARY_RUPEES, last_drawn, 5))
    checks.append(_rupee_check("OPS pension", OPS_PENSION_RUPEES, ops_pension(last_drawn), 5))

    # Split chain with the corpus pinned to the published headline.
    pinned = split_corpus(presets.HEADLINE_CORPUS, presets.DEFAULT_ANNUITY_SHARE, convention)
    checks.append(_rupee_check("Lumpsum at 25%", HEADLINE_LUMPSUM_RUPEES, pinned.lumpsum, 1))
    checks.append(
        _rupee_check("Annuity principal", HEADLINE_ANNUITY_RUPEES, pinned.annuity_principal, 1)
    )
    checks.append(
        _rupee_check(
            "Pinned NPS pension",
            HEADLINE_PENSION_RUPEES,
            annuity_pension(pinned.annuity_principal, presets.DEFAULT_ANNUITY_RATE),
            1,
        )
    )

    # Annuity-share sweep endpoints, full pipeline.
    overrides = Overrides(convention=convention)
    share_grid = [
        Rate.from_percent(p, kind=RateKind.RATIO) for p in presets.ANNUITY_SHARE_GRID
    ]
    fig2 = sweep_annuity_share(profile, share_grid, overrides)
    tol = Fraction(1, 1000)
    checks.append(
        _relative_check(
            "Pension at 40% share", FIG2_SHARE40_RUPEES, fig2.rows[0].result.monthly_pension, tol
        )
    )
    checks.append(
        _relative_check(
            "Pension at 80% share", FIG2_SHARE80_RUPEES, fig2.rows[-1].result.monthly_pension, tol
        )
    )

    # Employer-rate sweep point: 17% employer at 75% share.
    seventeen = Rate.from_percent("17", kind=RateKind.CONTRIBUTION)
    fig3_result = project(
        profile.with_employer_contrib(seventeen), Scheme.NPS, overrides
    )
    checks.append(
        _relative_check(
            "Pension at 17% employer", FIG3_EMPLOYER17_RUPEES, fig3_result.monthly_pension, tol
        )
    )
    ratio_pp = fig3_result.replacement_ratio.value * 100
    ratio_delta = ratio_pp - REPLACEMENT_RATIO_PERCENT
    checks.append(
        CheckResult(
            name="Replacement ratio at 75%/17%",
            expected=f"{float(REPLACEMENT_RATIO_PERCENT):.2f}%",
            actual=f"{float(ratio_pp):.4f}%",
            delta=f"{float(ratio_delta):+.4f}pp",
            tolerance="±0.05pp",
            passed=abs(ratio_delta) <= Fraction(5, 100),
        )
    )

    # Lifecycle weighted returns, exact decimal comparison.
    for name, expected in LIFECYCLE_RETURNS.items():
        fund = lifecycle_fund(name)
        actual = weighted_return(greedy_allocate(fund.equity_cap))
        checks.append(
            CheckResult(
                name=f"{name} fund return",
                expected=f"{float(expected):.2%}",
                actual=f"{float(actual.value):.2%}",
                delta="+0.0000%" if actual.value == expected else f"{float(actual.value - expected):+.4%}",
                tolerance="exact",
                passed=actual.value == expected,
            )
        )

    checks.append(headline_corpus_check())
    return checks


def headline_corpus_check() -> CheckResult:
    """Report the headline-corpus delta under both rate bases (due timing)."""
    profile = presets.REFERENCE_PROFILE
    series = build_contribution_series(profile)
    corpora: dict[RateBasis, int] = {}
    deltas: dict[RateBasis, Fraction] = {}
    for basis in RateBasis:
        corpus = accumulate(
            series, presets.DEFAULT_ANNUAL_RETURN, CompoundingConvention(basis, Timing.DUE)
        )
        corpora[basis] = corpus.rupee_value()
        deltas[basis] = Fraction(corpora[basis] - HEADLINE_CORPUS_RUPEES, HEADLINE_CORPUS_RUPEES)
    passed = all(abs(deltas[basis]) <= HEADLINE_BAND[basis] for basis in RateBasis)
    return CheckResult(
        name="Headline corpus",
        expected=str(HEADLINE_CORPUS_RUPEES),
        actual=", ".join(
            f"{CompoundingConvention(basis, Timing.DUE).label()} {corpora[basis]}"
            for basis in RateBasis
        ),
        delta=", ".join(
            f"{CompoundingConvention(basis, Timing.DUE).label()} {float(deltas[basis]):+.2%}"
            for basis in RateBasis
        ),
        tolerance=(
            f"NominalMonthly ±{float(HEADLINE_BAND[RateBasis.NOMINAL_MONTHLY]):.1%}, "
            f"EffectiveAnnual ±{float(HEADLINE_BAND[RateBasis.EFFECTIVE_ANNUAL]):.1%}"
        ),
        passed=passed,
        informational=True,
        note=HEADLINE_NOTE,
    )
