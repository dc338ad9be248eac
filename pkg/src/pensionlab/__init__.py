"""Deterministic retirement-benefit projection engine.

Exact-paise pension arithmetic for the OPS (direct benefit) and NPS
(defined contribution) schemes, portfolio allocation under regulatory
caps, and scenario sweeps, exposed through a CLI and a JSON HTTP API.
"""

__version__ = "0.1.0"

from .money import Money, Rate, Period, RateKind, RateBasis, annual_to_monthly, round_to_rupees
from .salary import (
    ContributionSeries,
    EmployeeProfile,
    IndexingMode,
    build_contribution_series,
    contribution_base,
    future_value,
    monthly_contribution,
)
from .portfolio import (
    AssetClass,
    CapSet,
    ExpectedReturns,
    LifecycleFund,
    PortfolioAllocation,
    DEFAULT_CAPS,
    DEFAULT_EXPECTED_RETURNS,
    LIFECYCLE_FUNDS,
    greedy_allocate,
    validate_allocation,
    weighted_return,
)
from .corpus import (
    CompoundingConvention,
    CorpusBreakdown,
    DEFAULT_CONVENTION,
    Timing,
    accumulate,
    flat_series_future_value,
    split_corpus,
)
from .benefits import (
    Overrides,
    ProjectionResult,
    Scheme,
    annuity_pension,
    gratuity_cap,
    ops_pension,
    project,
    replacement_ratio,
)
from .sweeps import (
    ComparisonReport,
    SweepRow,
    SweepSpec,
    SweepTable,
    SweptParameter,
    compare_ops_nps,
    run_sweep,
    sweep_annuity_share,
    sweep_employer_rate,
    sweep_expected_return,
    sweep_lifecycle,
    table_to_csv,
)
from .errors import DomainError, PensionLabError, ValidationError
