"""Allocation caps, greedy fill order, weighted returns."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pensionlab.errors import InfeasibleAllocationError, MissingExpectedReturnError
from pensionlab.money import Rate, RateKind
from pensionlab.portfolio import (
    AssetClass,
    CapSet,
    DEFAULT_CAPS,
    DEFAULT_EXPECTED_RETURNS,
    ExpectedReturns,
    LIFECYCLE_FUNDS,
    LifecycleFund,
    LifecycleName,
    PortfolioAllocation,
    greedy_allocate,
    lifecycle_fund,
    validate_allocation,
    weighted_return,
)

E, C, G = AssetClass.EQUITY, AssetClass.CORPORATE_DEBT, AssetClass.GOVERNMENT_SECURITIES
STD, ALT = AssetClass.SHORT_TERM_DEBT, AssetClass.ALTERNATIVE


def pct(v) -> Rate:
    return Rate.from_percent(str(v), kind=RateKind.RATIO)


def weights(e, c, g, std=0, alt=0):
    return {E: pct(e), C: pct(c), G: pct(g), STD: pct(std), ALT: pct(alt)}


# hand-run greedy fills for the four named equity ceilings
HAND_FILLS = {
    15: (15, 45, 40),
    25: (25, 45, 30),
    50: (50, 45, 5),
    75: (75, 25, 0),
}

# formula oracle: sum of weight x return with E=10%, C=8%, G=7%
HAND_RETURNS = {
    15: Fraction("0.079"),
    25: Fraction("0.082"),
    50: Fraction("0.0895"),
    75: Fraction("0.095"),
}


class TestValidateAllocation:
    def test_default_fund_allocation_ok(self):
        report = validate_allocation(weights(15, 45, 40), DEFAULT_CAPS)
        assert report.ok and not report.cap_violations

    def test_one_point_equity_breach(self):
        report = validate_allocation(weights(16, 45, 39), DEFAULT_CAPS)
        assert not report.ok
        assert [v.asset for v in report.cap_violations] == [E]
        assert "Equity" in report.describe()

    def test_underallocation_reported(self):
        report = validate_allocation(weights(10, 10, 10), DEFAULT_CAPS)
        assert not report.ok and not report.sum_ok
        assert report.total.value == Fraction(30, 100)

    def test_violation_report_carries_weight_and_cap(self):
        report = validate_allocation(weights(16, 45, 39), DEFAULT_CAPS)
        violation = report.cap_violations[0]
        assert violation.weight.value == Fraction(16, 100)
        assert violation.cap.value == Fraction(15, 100)


class TestGreedyAllocate:
    @pytest.mark.parametrize("cap,expected", sorted(HAND_FILLS.items()))
    def test_hand_run_fills(self, cap, expected):
        allocation = greedy_allocate(pct(cap))
        e, c, g = expected
        assert allocation[E].value == Fraction(e, 100)
        assert allocation[C].value == Fraction(c, 100)
        assert allocation[G].value == Fraction(g, 100)
        assert allocation[STD].value == 0 and allocation[ALT].value == 0

    def test_infeasible_when_core_classes_cannot_absorb(self):
        caps = CapSet(
            {G: pct(10), C: pct(10), E: pct(15), STD: pct(50), ALT: pct(50)}
        )
        with pytest.raises(InfeasibleAllocationError):
            greedy_allocate(pct(15), caps)

    def test_equity_cap_above_100_rejected(self):
        with pytest.raises(InfeasibleAllocationError):
            greedy_allocate(pct(101))

    @given(st.integers(min_value=0, max_value=100))
    def test_always_sums_to_one_and_respects_caps(self, cap_pct):
        allocation = greedy_allocate(pct(cap_pct))
        total = sum(allocation[a].value for a in AssetClass)
        assert total == 1
        assert allocation[E].value <= Fraction(cap_pct, 100)
        assert allocation[C].value <= DEFAULT_CAPS[C].value
        assert allocation[G].value <= DEFAULT_CAPS[G].value


class TestWeightedReturn:
    def test_single_asset_degenerate(self):
        allocation = PortfolioAllocation(weights(100, 0, 0))
        caps = CapSet({E: pct(100), C: pct(45), G: pct(55), STD: pct(10), ALT: pct(5)})
        assert validate_allocation(allocation, caps).ok
        assert weighted_return(allocation).value == Fraction(10, 100)

    @pytest.mark.parametrize("cap,expected", sorted(HAND_RETURNS.items()))
    def test_lifecycle_returns_exact(self, cap, expected):
        assert weighted_return(greedy_allocate(pct(cap))).value == expected

    def test_missing_return_raises(self):
        allocation = PortfolioAllocation(weights(15, 45, 30, std=10))
        with pytest.raises(MissingExpectedReturnError):
            weighted_return(allocation)

    def test_user_supplied_return_unlocks_class(self):
        returns = ExpectedReturns(
            {
                E: Rate.from_percent("10"),
                C: Rate.from_percent("8"),
                G: Rate.from_percent("7"),
                STD: Rate.from_percent("6"),
                ALT: None,
            }
        )
        allocation = PortfolioAllocation(weights(15, 45, 30, std=10))
        assert weighted_return(allocation, returns).value == Fraction("0.078")

    def test_monotone_in_equity_cap_over_grid(self):
        # brute-force 1% grid: E has the highest defined return
        previous = None
        for cap_pct in range(0, 76):
            value = weighted_return(greedy_allocate(pct(cap_pct))).value
            if previous is not None:
                assert value >= previous
            previous = value

    @given(st.integers(min_value=0, max_value=100))
    def test_bounded_by_min_max_defined_returns(self, cap_pct):
        value = weighted_return(greedy_allocate(pct(cap_pct))).value
        assert Fraction(7, 100) <= value <= Fraction(10, 100)


class TestCapSet:
    def test_default_caps_match_regulatory_table(self):
        assert DEFAULT_CAPS[G].value == Fraction(55, 100)
        assert DEFAULT_CAPS[C].value == Fraction(45, 100)
        assert DEFAULT_CAPS[E].value == Fraction(15, 100)
        assert DEFAULT_CAPS[STD].value == Fraction(10, 100)
        assert DEFAULT_CAPS[ALT].value == Fraction(5, 100)

    def test_caps_must_cover_full_allocation(self):
        with pytest.raises(ValueError):
            CapSet({E: pct(10), C: pct(10), G: pct(10), STD: pct(10), ALT: pct(10)})

    def test_missing_class_rejected(self):
        with pytest.raises(ValueError):
            CapSet({E: pct(50), C: pct(50), G: pct(50), STD: pct(50)})


class TestLifecycleFunds:
    def test_named_equity_ceilings(self):
        assert LIFECYCLE_FUNDS[LifecycleName.AGGRESSIVE].equity_cap.value == Fraction(75, 100)
        assert LIFECYCLE_FUNDS[LifecycleName.MODERATE].equity_cap.value == Fraction(50, 100)
        assert LIFECYCLE_FUNDS[LifecycleName.CONSERVATIVE].equity_cap.value == Fraction(25, 100)
        assert LIFECYCLE_FUNDS[LifecycleName.DEFAULT].equity_cap.value == Fraction(15, 100)

    def test_lookup_by_name_case_insensitive(self):
        assert lifecycle_fund("aggressive") is LIFECYCLE_FUNDS[LifecycleName.AGGRESSIVE]

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            lifecycle_fund("yolo")

    def test_wrong_ceiling_rejected(self):
        with pytest.raises(ValueError):
            LifecycleFund(LifecycleName.AGGRESSIVE, pct(60))


class TestAllocationInvariants:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            PortfolioAllocation(weights(10, 10, 10))

    def test_allocation_json_uses_decimal_strings(self):
        allocation = greedy_allocate(pct(15))
        payload = allocation.to_json()
        assert payload["Equity"] == "0.15"
        assert PortfolioAllocation.from_json(payload) == allocation
