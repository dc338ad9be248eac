"""Corpus accumulation under explicit conventions and the lumpsum split."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pensionlab.corpus import (
    CompoundingConvention,
    DEFAULT_CONVENTION,
    Timing,
    accumulate,
    flat_series_future_value,
    split_corpus,
)
from pensionlab.errors import ShareOutOfRangeError
from pensionlab.money import Money, Rate, RateBasis, RateKind, annual_to_monthly
from pensionlab.presets import HEADLINE_CORPUS, REFERENCE_PROFILE
from pensionlab.salary import ContributionSeries, IndexingMode, build_contribution_series

RETURN_9 = Rate.from_percent("9")
ONE_RUPEE = Fraction(100)

#: Corpus implied by the published annuity-share sweep: the 80%-share
#: pension back-solves to 302233 x 12 / (0.08 x 0.80) rupees.
SWEEP_IMPLIED_CORPUS = Fraction(302_233 * 12, 1) / (Fraction(8, 100) * Fraction(80, 100))


def flat_series(paise: int, months: int) -> ContributionSeries:
    return ContributionSeries((Money.from_paise(paise),) * months, IndexingMode.FLAT)


def loop_oracle(payments, monthly_rate: Fraction, timing: Timing) -> Fraction:
    """Independent month-by-month balance recurrence."""
    balance = Fraction(0)
    for payment in payments:
        if timing is Timing.DUE:
            balance = (balance + payment) * (1 + monthly_rate)
        else:
            balance = balance * (1 + monthly_rate) + payment
    return balance


class TestAccumulate:
    def test_reference_corpus_matches_sweep_implied_value(self):
        series = build_contribution_series(REFERENCE_PROFILE)
        corpus = accumulate(series, RETURN_9, DEFAULT_CONVENTION)
        rupees = corpus.amount_paise / 100
        assert abs(rupees - SWEEP_IMPLIED_CORPUS) / SWEEP_IMPLIED_CORPUS < Fraction(1, 1000)

    def test_zero_rate_conserves_contributions(self):
        series = flat_series(12_345, 37)
        assert accumulate(series, Rate.zero()) == series.total()

    def test_single_month_due_definition(self):
        series = flat_series(1_000_000, 1)
        corpus = accumulate(series, RETURN_9, DEFAULT_CONVENTION)
        assert corpus.amount_paise == Fraction(1_000_000) * Fraction(403, 400)

    def test_single_month_ordinary_has_no_growth(self):
        series = flat_series(1_000_000, 1)
        convention = CompoundingConvention(RateBasis.NOMINAL_MONTHLY, Timing.ORDINARY)
        assert accumulate(series, RETURN_9, convention) == Money.from_paise(1_000_000)

    @pytest.mark.parametrize("basis", list(RateBasis))
    @pytest.mark.parametrize("timing", list(Timing))
    def test_matches_loop_oracle_exactly(self, basis, timing):
        convention = CompoundingConvention(basis, timing)
        series = flat_series(1_911_888, 420)
        monthly = annual_to_monthly(RETURN_9, basis).value
        oracle = loop_oracle([m.amount_paise for m in series.monthly_amounts], monthly, timing)
        assert accumulate(series, RETURN_9, convention).amount_paise == oracle

    @pytest.mark.parametrize("basis", list(RateBasis))
    @pytest.mark.parametrize("timing", list(Timing))
    def test_closed_form_matches_loop_within_a_rupee(self, basis, timing):
        convention = CompoundingConvention(basis, timing)
        payment = Money.from_paise(1_911_888)
        closed = flat_series_future_value(payment, RETURN_9, 420, convention)
        looped = accumulate(flat_series(1_911_888, 420), RETURN_9, convention)
        assert abs(closed.amount_paise - looped.amount_paise) <= ONE_RUPEE

    def test_closed_form_zero_rate(self):
        payment = Money.from_paise(500)
        assert flat_series_future_value(payment, Rate.zero(), 24) == payment * 24

    @given(st.integers(min_value=1, max_value=10**7), st.integers(min_value=1, max_value=60))
    @settings(max_examples=20)
    def test_due_is_ordinary_times_growth(self, paise, months):
        series = flat_series(paise, months)
        due = accumulate(series, RETURN_9, CompoundingConvention(RateBasis.NOMINAL_MONTHLY, Timing.DUE))
        ordinary = accumulate(
            series, RETURN_9, CompoundingConvention(RateBasis.NOMINAL_MONTHLY, Timing.ORDINARY)
        )
        assert due.amount_paise == ordinary.amount_paise * Fraction(403, 400)
        assert due >= ordinary

    @given(st.integers(min_value=1, max_value=10**7), st.integers(min_value=1, max_value=7))
    @settings(max_examples=20)
    def test_linear_in_contributions(self, paise, factor):
        series = flat_series(paise, 60)
        scaled = series.scaled(Fraction(factor))
        assert accumulate(scaled, RETURN_9).amount_paise == factor * accumulate(series, RETURN_9).amount_paise

    def test_strictly_increasing_in_return_over_grid(self):
        # 0% to 12% in 0.5% steps
        series = flat_series(1_911_888, 420)
        previous = None
        for half_pct in range(0, 25):
            corpus = accumulate(series, Rate(Fraction(half_pct, 200)))
            if previous is not None:
                assert corpus > previous
            previous = corpus

    def test_wage_indexed_series_accumulates_bigger_corpus(self):
        flat = accumulate(build_contribution_series(REFERENCE_PROFILE), RETURN_9)
        indexed = accumulate(
            build_contribution_series(REFERENCE_PROFILE, IndexingMode.WAGE_INDEXED), RETURN_9
        )
        assert indexed > flat

    def test_requires_annual_rate(self):
        monthly = annual_to_monthly(RETURN_9, RateBasis.NOMINAL_MONTHLY)
        with pytest.raises(ValueError):
            accumulate(flat_series(1, 1), monthly)


class TestSplitCorpus:
    def test_published_split_chain(self):
        breakdown = split_corpus(HEADLINE_CORPUS, Rate.from_percent("75", kind=RateKind.RATIO))
        assert abs(breakdown.lumpsum.rupee_value() - 13_337_315) <= 1
        assert abs(breakdown.annuity_principal.rupee_value() - 40_011_947) <= 1

    def test_full_annuitization(self):
        corpus = Money.from_rupees(999)
        breakdown = split_corpus(corpus, Rate.from_percent("100", kind=RateKind.RATIO))
        assert breakdown.lumpsum == Money.zero()
        assert breakdown.annuity_principal == corpus

    def test_hand_split(self):
        breakdown = split_corpus(Money.from_rupees(1000), Rate.from_percent("40", kind=RateKind.RATIO))
        assert breakdown.lumpsum == Money.from_rupees(600)
        assert breakdown.annuity_principal == Money.from_rupees(400)

    def test_share_out_of_range(self):
        with pytest.raises(ShareOutOfRangeError):
            split_corpus(Money.from_rupees(1), Rate(Fraction(11, 10)))

    def test_zero_share_clamps_rounding_overshoot(self):
        # sub-rupee corpus tail: rounding the lumpsum up would overshoot
        corpus = Money(Fraction(99_99_950, 1) + Fraction(1, 3))
        breakdown = split_corpus(corpus, Rate.zero(kind=RateKind.RATIO))
        assert breakdown.lumpsum == corpus
        assert breakdown.annuity_principal == Money.zero()

    def test_negative_corpus_rejected(self):
        from pensionlab.errors import DomainError

        with pytest.raises(DomainError):
            split_corpus(Money.from_rupees(-1), Rate(Fraction(1, 2)))

    @given(
        st.integers(min_value=0, max_value=10**13),
        st.integers(min_value=1, max_value=10**6),
        st.integers(min_value=0, max_value=10**4),
    )
    def test_conservation_exact_for_all_inputs(self, numerator, denominator, share_bp):
        # corpus may carry a fractional paise part; conservation still exact
        corpus = Money(Fraction(numerator, denominator))
        share = Rate(Fraction(share_bp, 10**4), kind=RateKind.RATIO)
        breakdown = split_corpus(corpus, share)
        assert breakdown.lumpsum + breakdown.annuity_principal == corpus
        assert breakdown.lumpsum_share.value + breakdown.annuity_share.value == 1

    def test_breakdown_records_convention(self):
        convention = CompoundingConvention(RateBasis.EFFECTIVE_ANNUAL, Timing.ORDINARY)
        breakdown = split_corpus(Money.from_rupees(100), Rate(Fraction(1, 2)), convention)
        assert breakdown.convention == convention

    def test_json_quantization_preserves_conservation(self):
        corpus = Money(Fraction(10**13, 7))
        breakdown = split_corpus(corpus, Rate(Fraction(3, 4), kind=RateKind.RATIO))
        payload = breakdown.to_json()
        assert payload["lumpsum"]["paise"] + payload["annuity_principal"]["paise"] == payload["corpus"]["paise"]


class TestConventionMetadata:
    def test_labels(self):
        assert DEFAULT_CONVENTION.label() == "NominalMonthly+Due"
        assert (
            CompoundingConvention(RateBasis.EFFECTIVE_ANNUAL, Timing.ORDINARY).label()
            == "EffectiveAnnual+Ordinary"
        )

    def test_json_round_trip(self):
        for basis in RateBasis:
            for timing in Timing:
                convention = CompoundingConvention(basis, timing)
                assert CompoundingConvention.from_json(convention.to_json()) == convention

    def test_unknown_basis_rejected(self):
        from pensionlab.errors import ValidationError

        with pytest.raises(ValidationError):
            CompoundingConvention.from_json({"rate_basis": "Continuous", "timing": "Due"})
