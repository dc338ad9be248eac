"""Reference scenario constants.

The benchmark employee is a central-government officer at pay level 10
(GP 5400): ₹56,100 basic with 42% DA, appointed at 25, superannuating
at 60, contributing 10% (employee) + 14% (employer) of basic plus DA,
with a present gross salary of ₹1,10,000 growing at a combined 9% a
year.  These are the inputs behind every published benchmark figure the
`reproduce-paper` command checks against.
"""

from __future__ import annotations

from .money import Money, Period, Rate, RateKind
from .salary import EmployeeProfile

REFERENCE_PROFILE = EmployeeProfile(
    appointment_age=25,
    retirement_age=60,
    basic_pay=Money.from_rupees(56_100),
    da_rate=Rate.from_percent("42", Period.PER_YEAR, RateKind.DA),
    gross_salary=Money.from_rupees(110_000),
    combined_growth=Rate.from_percent("9", Period.PER_YEAR, RateKind.GROWTH),
    employee_contrib=Rate.from_percent("10", Period.PER_YEAR, RateKind.CONTRIBUTION),
    employer_contrib=Rate.from_percent("14", Period.PER_YEAR, RateKind.CONTRIBUTION),
)

DEFAULT_ANNUAL_RETURN = Rate.from_percent("9", Period.PER_YEAR, RateKind.RETURN)
DEFAULT_ANNUITY_SHARE = Rate.from_percent("75", Period.PER_YEAR, RateKind.RATIO)
DEFAULT_ANNUITY_RATE = Rate.from_percent("8", Period.PER_YEAR, RateKind.ANNUITY)

#: The published headline corpus, not exactly reproducible under any of
#: the four conventions with the stated inputs; carried for the pinned
#: reproduction chain and the discrepancy report.
HEADLINE_CORPUS = Money.from_rupees(53_349_262)

#: Annuity-share sweep grid (percent of corpus annuitized).
ANNUITY_SHARE_GRID = ("40", "50", "60", "70", "75", "80")

#: Employer-contribution sweep grid (percent of basic plus DA).
EMPLOYER_RATE_GRID = ("14", "15", "16", "17", "18", "19", "20")

#: Lifecycle sweep order, least to most aggressive equity ceiling.
LIFECYCLE_ORDER = ("Default", "Conservative", "Moderate", "Aggressive")
