"""Asset allocation under regulatory caps and the expected-return model.

Allocation follows a greedy fill order — equity first up to its cap,
then corporate debt, then government securities — and the portfolio's
expected return is the weight-averaged sum of per-class expected
returns.  All comparisons are exact decimal arithmetic; there is no
epsilon anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import InfeasibleAllocationError, MissingExpectedReturnError
from .jsonutil import expect_mapping
from .money import Period, Rate, RateKind, fraction_to_decimal_str

ONE = Fraction(1)


class AssetClass(enum.Enum):
    EQUITY = "Equity"
    CORPORATE_DEBT = "CorporateDebt"
    GOVERNMENT_SECURITIES = "GovernmentSecurities"
    SHORT_TERM_DEBT = "ShortTermDebt"
    ALTERNATIVE = "Alternative"


def _pct(value: str, kind: RateKind = RateKind.RATIO) -> Rate:
    return Rate.from_percent(value, kind=kind)


def _full_class_map(mapping: Mapping[AssetClass, object], what: str) -> None:
    missing = [c.value for c in AssetClass if c not in mapping]
    extra = [k for k in mapping if not isinstance(k, AssetClass)]
    if missing or extra:
        raise ValueError(f"{what} must cover every asset class exactly once (missing {missing}, extra {extra})")


@dataclass(frozen=True)
class CapSet:
    """Per-class maximum weights.  Caps must be able to absorb 100%."""

    caps: Mapping[AssetClass, Rate]

    def __post_init__(self) -> None:
        _full_class_map(self.caps, "CapSet")
        total = sum(r.value for r in self.caps.values())
        if total < 1:
            raise ValueError(
                f"caps sum to {fraction_to_decimal_str(total)} < 1; no feasible full allocation"
            )
        object.__setattr__(self, "caps", MappingProxyType(dict(self.caps)))

    def __getitem__(self, asset: AssetClass) -> Rate:
        return self.caps[asset]

    def with_equity_cap(self, equity_cap: Rate) -> "CapSet":
        caps = dict(self.caps)
        caps[AssetClass.EQUITY] = equity_cap
        return CapSet(caps)

    def to_json(self) -> dict:
        return {c.value: self.caps[c].as_decimal_str() for c in AssetClass}


@dataclass(frozen=True)
class PortfolioAllocation:
    """Weights per asset class; must sum to exactly 100%."""

    weights: Mapping[AssetClass, Rate]

    def __post_init__(self) -> None:
        _full_class_map(self.weights, "PortfolioAllocation")
        total = sum(r.value for r in self.weights.values())
        if total != 1:
            raise ValueError(f"weights sum to {fraction_to_decimal_str(total)}, expected exactly 1")
        object.__setattr__(self, "weights", MappingProxyType(dict(self.weights)))

    def __getitem__(self, asset: AssetClass) -> Rate:
        return self.weights[asset]

    def to_json(self) -> dict:
        return {c.value: self.weights[c].as_decimal_str() for c in AssetClass}

    @classmethod
    def from_json(cls, obj: object, *, field: str = "allocation") -> "PortfolioAllocation":
        data = expect_mapping(obj, {c.value for c in AssetClass}, field=field)
        weights = {
            c: Rate(Fraction(str(data[c.value])), kind=RateKind.RATIO) for c in AssetClass
        }
        return cls(weights)


#: Regulatory cap table for the default (non-lifecycle) scheme.
DEFAULT_CAPS = CapSet(
    {
        AssetClass.GOVERNMENT_SECURITIES: _pct("55"),
        AssetClass.CORPORATE_DEBT: _pct("45"),
        AssetClass.EQUITY: _pct("15"),
        AssetClass.SHORT_TERM_DEBT: _pct("10"),
        AssetClass.ALTERNATIVE: _pct("5"),
    }
)


@dataclass(frozen=True)
class ExpectedReturns:
    """Per-class expected annual returns; None means undefined.

    Short-term debt and alternatives carry no default and must be
    supplied by the caller before they can take nonzero weight.
    """

    returns: Mapping[AssetClass, Rate | None]

    def __post_init__(self) -> None:
        _full_class_map(self.returns, "ExpectedReturns")
        object.__setattr__(self, "returns", MappingProxyType(dict(self.returns)))

    def __getitem__(self, asset: AssetClass) -> Rate | None:
        return self.returns[asset]


DEFAULT_EXPECTED_RETURNS = ExpectedReturns(
    {
        AssetClass.EQUITY: _pct("10", RateKind.RETURN),
        AssetClass.CORPORATE_DEBT: _pct("8", RateKind.RETURN),
        AssetClass.GOVERNMENT_SECURITIES: _pct("7", RateKind.RETURN),
        AssetClass.SHORT_TERM_DEBT: None,
        AssetClass.ALTERNATIVE: None,
    }
)


class LifecycleName(enum.Enum):
    AGGRESSIVE = "Aggressive"
    MODERATE = "Moderate"
    CONSERVATIVE = "Conservative"
    DEFAULT = "Default"


_LIFECYCLE_EQUITY_CAPS = {
    LifecycleName.AGGRESSIVE: _pct("75"),
    LifecycleName.MODERATE: _pct("50"),
    LifecycleName.CONSERVATIVE: _pct("25"),
    LifecycleName.DEFAULT: _pct("15"),
}


@dataclass(frozen=True, slots=True)
class LifecycleFund:
    """A named equity ceiling, static over the whole career."""

    name: LifecycleName
    equity_cap: Rate

    def __post_init__(self) -> None:
        expected = _LIFECYCLE_EQUITY_CAPS[self.name]
        if self.equity_cap.value != expected.value:
            raise ValueError(
                f"{self.name.value} fund carries a {expected.as_percent_str(0)} equity cap"
            )


LIFECYCLE_FUNDS: Mapping[LifecycleName, LifecycleFund] = MappingProxyType(
    {name: LifecycleFund(name, cap) for name, cap in _LIFECYCLE_EQUITY_CAPS.items()}
)


def lifecycle_fund(name: str) -> LifecycleFund:
    for member in LifecycleName:
        if member.value.lower() == name.lower():
            return LIFECYCLE_FUNDS[member]
    allowed = ", ".join(m.value for m in LifecycleName)
    raise ValueError(f"unknown lifecycle fund {name!r}; expected one of {allowed}")


@dataclass(frozen=True, slots=True)
class CapViolation:
    asset: AssetClass
    weight: Rate
    cap: Rate

    def describe(self) -> str:
        return (
            f"{self.asset.value} weight {self.weight.as_percent_str()} exceeds "
            f"cap {self.cap.as_percent_str()}"
        )


@dataclass(frozen=True, slots=True)
class AllocationReport:
    """Outcome of validating weights against a cap set."""

    ok: bool
    total: Rate
    sum_ok: bool
    cap_violations: tuple[CapViolation, ...]

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = [v.describe() for v in self.cap_violations]
        if not self.sum_ok:
            parts.append(f"weights sum to {self.total.as_percent_str()}, expected 100%")
        return "; ".join(parts)


def validate_allocation(
    weights: Mapping[AssetClass, Rate] | PortfolioAllocation, caps: CapSet = DEFAULT_CAPS
) -> AllocationReport:
    """Check weights against caps and the sum-to-100% rule.

    Violations come back as a report, not an exception: an invalid
    allocation is an answer, not a fault.
    """
    if isinstance(weights, PortfolioAllocation):
        weights = weights.weights
    _full_class_map(weights, "weights")
    violations = tuple(
        CapViolation(asset, weights[asset], caps[asset])
        for asset in AssetClass
        if weights[asset].value > caps[asset].value
    )
    total = Rate(sum(w.value for w in weights.values()), kind=RateKind.RATIO)
    sum_ok = total.value == 1
    return AllocationReport(
        ok=sum_ok and not violations, total=total, sum_ok=sum_ok, cap_violations=violations
    )


def greedy_allocate(equity_cap: Rate, caps: CapSet = DEFAULT_CAPS) -> PortfolioAllocation:
    """Fill equity to its cap, then corporate debt, then government securities.

    Short-term debt and alternatives stay at zero: the fill order names
    only the three core classes.  Raises when those three cannot absorb
    the full 100%.
    """
    if equity_cap.value > 1:
        raise InfeasibleAllocationError("equity cap cannot exceed 100%")
    equity = equity_cap.value
    corporate = min(caps[AssetClass.CORPORATE_DEBT].value, ONE - equity)
    government = min(caps[AssetClass.GOVERNMENT_SECURITIES].value, ONE - equity - corporate)
    if equity + corporate + government != 1:
        raise InfeasibleAllocationError(
            "equity, corporate-debt and government caps "
            f"absorb only {fraction_to_decimal_str(equity + corporate + government)} of the portfolio"
        )
    allocation = PortfolioAllocation(
        {
            AssetClass.EQUITY: Rate(equity, kind=RateKind.RATIO),
            AssetClass.CORPORATE_DEBT: Rate(corporate, kind=RateKind.RATIO),
            AssetClass.GOVERNMENT_SECURITIES: Rate(government, kind=RateKind.RATIO),
            AssetClass.SHORT_TERM_DEBT: Rate.zero(kind=RateKind.RATIO),
            AssetClass.ALTERNATIVE: Rate.zero(kind=RateKind.RATIO),
        }
    )
    report = validate_allocation(allocation, caps.with_equity_cap(equity_cap))
    if not report.ok:  # pragma: no cover - guarded by construction
        raise InfeasibleAllocationError(report.describe())
    return allocation


def weighted_return(
    allocation: PortfolioAllocation, returns: ExpectedReturns = DEFAULT_EXPECTED_RETURNS
) -> Rate:
    """Weight-averaged expected annual return of an allocation."""
    numerator = Fraction(0)
    denominator = Fraction(0)
    for asset in AssetClass:
        weight = allocation[asset].value
        denominator += weight
        if weight == 0:
            continue
        expected = returns[asset]
        if expected is None:
            raise MissingExpectedReturnError(
                f"{asset.value} carries weight but has no defined expected return"
            )
        numerator += weight * expected.value
    return Rate(numerator / denominator, Period.PER_YEAR, RateKind.RETURN)
