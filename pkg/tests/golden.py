"""Paired input fixtures for the CLI / service / engine equivalence suite.

Each fixture describes one projection request in primitive values and
can be rendered as CLI argv, as an HTTP request body, and as direct
engine arguments.  The three surfaces must produce canonically
identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

from pensionlab.benefits import Overrides, Scheme
from pensionlab.corpus import CompoundingConvention, Timing
from pensionlab.money import Money, Period, Rate, RateBasis, RateKind
from pensionlab.salary import EmployeeProfile, IndexingMode

_BASES = {"nominal-monthly": RateBasis.NOMINAL_MONTHLY, "effective-annual": RateBasis.EFFECTIVE_ANNUAL}
_TIMINGS = {"due": Timing.DUE, "ordinary": Timing.ORDINARY}


@dataclass(frozen=True)
class GoldenFixture:
    name: str
    scheme: str
    basic: int = 56_100
    da_pct: str = "42"
    gross: int = 110_000
    growth_pct: str = "9"
    employee_pct: str = "10"
    employer_pct: str = "14"
    age: int = 25
    retire_age: int = 60
    return_pct: str | None = None
    share_pct: str | None = None
    annuity_pct: str | None = None
    convention: str | None = None
    mode: str | None = None
    pin_corpus: int | None = None

    def cli_argv(self) -> list[str]:
        argv = [
            "project",
            "--scheme", self.scheme,
            "--basic", str(self.basic),
            "--da", self.da_pct,
            "--gross", str(self.gross),
            "--growth", self.growth_pct,
            "--employee-rate", self.employee_pct,
            "--employer-rate", self.employer_pct,
            "--age", str(self.age),
            "--retire-age", str(self.retire_age),
            "--json",
        ]
        if self.return_pct is not None:
            argv += ["--return", self.return_pct]
        if self.share_pct is not None:
            argv += ["--annuity-share", self.share_pct]
        if self.annuity_pct is not None:
            argv += ["--annuity-rate", self.annuity_pct]
        if self.convention is not None:
            argv += ["--convention", self.convention]
        if self.mode is not None:
            argv += ["--mode", self.mode]
        if self.pin_corpus is not None:
            argv += ["--pin-corpus", str(self.pin_corpus)]
        return argv

    def _parsed_convention(self) -> CompoundingConvention | None:
        if self.convention is None:
            return None
        basis, _, timing = self.convention.partition("+")
        return CompoundingConvention(_BASES[basis], _TIMINGS[timing or "due"])

    def profile(self) -> EmployeeProfile:
        return EmployeeProfile(
            appointment_age=self.age,
            retirement_age=self.retire_age,
            basic_pay=Money.from_rupees(self.basic),
            da_rate=Rate.from_percent(self.da_pct, Period.PER_YEAR, RateKind.DA),
            gross_salary=Money.from_rupees(self.gross),
            combined_growth=Rate.from_percent(self.growth_pct, Period.PER_YEAR, RateKind.GROWTH),
            employee_contrib=Rate.from_percent(self.employee_pct, Period.PER_YEAR, RateKind.CONTRIBUTION),
            employer_contrib=Rate.from_percent(self.employer_pct, Period.PER_YEAR, RateKind.CONTRIBUTION),
        )

    def overrides(self) -> Overrides:
        return Overrides(
            annual_return=Rate.from_percent(self.return_pct) if self.return_pct else None,
            annuity_share=Rate.from_percent(self.share_pct, kind=RateKind.RATIO)
            if self.share_pct
            else None,
            annuity_rate=Rate.from_percent(self.annuity_pct, kind=RateKind.ANNUITY)
            if self.annuity_pct
            else None,
            convention=self._parsed_convention(),
            indexing_mode={None: None, "flat": IndexingMode.FLAT, "wage-indexed": IndexingMode.WAGE_INDEXED}[
                self.mode
            ],
            pinned_corpus=Money.from_rupees(self.pin_corpus) if self.pin_corpus is not None else None,
        )

    def scheme_enum(self) -> Scheme:
        return Scheme(self.scheme.upper())

    def api_body(self) -> dict:
        body: dict = {"profile": self.profile().to_json(), "scheme": self.scheme.upper()}
        overrides = self.overrides().to_json()
        if overrides:
            body["overrides"] = overrides
        return body


FIXTURES: tuple[GoldenFixture, ...] = (
    GoldenFixture("ops-reference", "ops"),
    GoldenFixture("ops-modest-career", "ops", gross=50_000, growth_pct="5", age=30, retire_age=58),
    GoldenFixture("nps-defaults", "nps"),
    GoldenFixture("nps-share-40", "nps", share_pct="40"),
    GoldenFixture("nps-share-50", "nps", share_pct="50"),
    GoldenFixture("nps-share-60", "nps", share_pct="60"),
    GoldenFixture("nps-share-70", "nps", share_pct="70"),
    GoldenFixture("nps-share-80", "nps", share_pct="80"),
    GoldenFixture("nps-pinned-headline", "nps", pin_corpus=53_349_262),
    GoldenFixture("nps-effective-annual", "nps", convention="effective-annual"),
    GoldenFixture("nps-nominal-ordinary", "nps", convention="nominal-monthly+ordinary"),
    GoldenFixture("nps-effective-ordinary", "nps", convention="effective-annual+ordinary"),
    GoldenFixture("nps-wage-indexed", "nps", mode="wage-indexed"),
    GoldenFixture("nps-zero-contributions", "nps", employee_pct="0", employer_pct="0"),
    GoldenFixture("nps-employer-17", "nps", employer_pct="17"),
    GoldenFixture("nps-employer-20", "nps", employer_pct="20"),
    GoldenFixture("nps-lifecycle-default-return", "nps", return_pct="7.9"),
    GoldenFixture("nps-annuity-rate-6", "nps", annuity_pct="6"),
    GoldenFixture("nps-early-retirement", "nps", retire_age=50),
    GoldenFixture("nps-senior-profile", "nps", basic=100_000, da_pct="50", gross=180_000, share_pct="80"),
)
