"""Salary projection: future value, contribution base, career series."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pensionlab.errors import ValidationError
from pensionlab.money import Money, Period, Rate, RateKind
from pensionlab.presets import REFERENCE_PROFILE
from pensionlab.salary import (
    ContributionSeries,
    EmployeeProfile,
    IndexingMode,
    build_contribution_series,
    contribution_base,
    future_value,
    monthly_contribution,
)

growth_9 = Rate.from_percent("9", kind=RateKind.GROWTH)


class TestFutureValue:
    def test_published_salary_chain(self):
        fv = future_value(Money.from_rupees(110_000), growth_9, 35)
        assert abs(fv.rupee_value() - 2_245_536) <= 5

    def test_zero_years_is_identity(self):
        m = Money.from_rupees(123_456)
        assert future_value(m, growth_9, 0) == m

    def test_hand_checkable_compounding(self):
        assert future_value(Money.from_rupees(100), Rate.from_percent("10"), 2) == Money.from_rupees(121)

    @given(
        st.integers(min_value=1, max_value=10**9),
        st.integers(min_value=0, max_value=1500),
        st.integers(min_value=0, max_value=20),
        st.integers(min_value=0, max_value=20),
    )
    def test_exponent_composition_exact(self, paise, bp, a, b):
        m = Money.from_paise(paise)
        r = Rate(Fraction(bp, 10_000))
        assert future_value(m, r, a + b) == future_value(future_value(m, r, a), r, b)

    def test_strictly_increasing_in_each_argument(self):
        m = Money.from_rupees(1000)
        r = Rate.from_percent("5")
        assert future_value(m, r, 11) > future_value(m, r, 10)
        assert future_value(m, Rate.from_percent("6"), 10) > future_value(m, r, 10)
        assert future_value(Money.from_rupees(1001), r, 10) > future_value(m, r, 10)

    def test_negative_years_rejected(self):
        with pytest.raises(ValueError):
            future_value(Money.zero(), growth_9, -1)


class TestContributionBase:
    def test_reference_base(self):
        # 56,100 × 1.42 by hand
        assert contribution_base(Money.from_rupees(56_100), REFERENCE_PROFILE.da_rate) == Money.from_rupees(79_662)

    def test_zero_da(self):
        m = Money.from_rupees(56_100)
        assert contribution_base(m, Rate.zero(kind=RateKind.DA)) == m

    def test_fifty_percent(self):
        assert contribution_base(Money.from_rupees(100), Rate.from_percent("50", kind=RateKind.DA)) == Money.from_rupees(150)


class TestProfileValidation:
    def test_reference_profile_tenure(self):
        assert REFERENCE_PROFILE.tenure_years == 35
        assert REFERENCE_PROFILE.tenure_months == 420

    def test_age_order_enforced(self):
        with pytest.raises(ValidationError):
            EmployeeProfile(
                appointment_age=60,
                retirement_age=25,
                basic_pay=Money.from_rupees(1),
                da_rate=Rate.zero(kind=RateKind.DA),
                gross_salary=Money.from_rupees(1),
                combined_growth=growth_9,
                employee_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
                employer_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
            )

    def test_age_bounds(self):
        with pytest.raises(ValidationError) as excinfo:
            EmployeeProfile(
                appointment_age=17,
                retirement_age=80,
                basic_pay=Money.from_rupees(1),
                da_rate=Rate.zero(kind=RateKind.DA),
                gross_salary=Money.from_rupees(1),
                combined_growth=growth_9,
                employee_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
                employer_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
            )
        fields = {e.field for e in excinfo.value.errors}
        assert fields == {"appointment_age", "retirement_age"}

    def test_contribution_rate_capped(self):
        with pytest.raises(ValidationError):
            EmployeeProfile(
                appointment_age=25,
                retirement_age=60,
                basic_pay=Money.from_rupees(1),
                da_rate=Rate.zero(kind=RateKind.DA),
                gross_salary=Money.from_rupees(1),
                combined_growth=growth_9,
                employee_contrib=Rate.from_percent("101", kind=RateKind.CONTRIBUTION),
                employer_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
            )

    def test_json_round_trip(self):
        payload = REFERENCE_PROFILE.to_json()
        assert EmployeeProfile.from_json(payload) == REFERENCE_PROFILE

    def test_json_rejects_unknown_fields(self):
        payload = REFERENCE_PROFILE.to_json()
        payload["hobby"] = "chess"
        with pytest.raises(ValidationError):
            EmployeeProfile.from_json(payload)


class TestContributionSeries:
    def test_reference_flat_series(self):
        # 0.24 × 79,662 = 19,118.88 exactly, by hand
        series = build_contribution_series(REFERENCE_PROFILE, IndexingMode.FLAT)
        assert len(series) == 420
        assert all(m == Money.from_paise(1_911_888) for m in series.monthly_amounts)

    def test_zero_contribution_rates_give_zero_series(self):
        profile = EmployeeProfile(
            appointment_age=25,
            retirement_age=60,
            basic_pay=Money.from_rupees(56_100),
            da_rate=REFERENCE_PROFILE.da_rate,
            gross_salary=Money.from_rupees(110_000),
            combined_growth=growth_9,
            employee_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
            employer_contrib=Rate.zero(kind=RateKind.CONTRIBUTION),
        )
        series = build_contribution_series(profile)
        assert series.total() == Money.zero()

    def test_wage_indexed_steps_on_anniversary(self):
        series = build_contribution_series(REFERENCE_PROFILE, IndexingMode.WAGE_INDEXED)
        first = series.monthly_amounts[0]
        assert series.monthly_amounts[11] == first
        assert series.monthly_amounts[12] == first * Fraction(109, 100)
        assert series.monthly_amounts[23] == series.monthly_amounts[12]

    @given(st.integers(min_value=1, max_value=10**8), st.integers(min_value=1, max_value=600))
    def test_flat_total_is_months_times_amount(self, paise, months):
        amount = Money.from_paise(paise)
        series = ContributionSeries((amount,) * months, IndexingMode.FLAT)
        assert series.total() == amount * months

    def test_flat_series_rejects_uneven_entries(self):
        with pytest.raises(ValueError):
            ContributionSeries((Money.from_paise(1), Money.from_paise(2)), IndexingMode.FLAT)

    def test_wage_indexed_rejects_decreasing(self):
        with pytest.raises(ValueError):
            ContributionSeries((Money.from_paise(2), Money.from_paise(1)), IndexingMode.WAGE_INDEXED)

    def test_empty_series_rejected(self):
        with pytest.raises(ValueError):
            ContributionSeries((), IndexingMode.FLAT)

    def test_monthly_contribution_reference(self):
        assert monthly_contribution(REFERENCE_PROFILE) == Money.from_paise(1_911_888)
