#!/usr/bin/env python3
"""Compare the four compounding conventions on the reference profile.

Prints corpus and pension per convention, plus each corpus's delta
against the published headline value.  Useful when deciding which
convention a third-party calculator used.
"""

from fractions import Fraction

from pensionlab.benefits import Overrides, Scheme, project
from pensionlab.corpus import CompoundingConvention, Timing
from pensionlab.money import RateBasis
from pensionlab.presets import HEADLINE_CORPUS, REFERENCE_PROFILE


def main() -> None:
    headline = HEADLINE_CORPUS.amount_paise
    print(f"{'convention':32}  {'corpus':>15}  {'pension':>12}  {'vs headline':>11}")
    for basis in RateBasis:
        for timing in Timing:
            convention = CompoundingConvention(basis, timing)
            result = project(REFERENCE_PROFILE, Scheme.NPS, Overrides(convention=convention))
            corpus = result.breakdown.corpus
            delta = (corpus.amount_paise - headline) / Fraction(headline)
            print(
                f"{convention.label():32}  {corpus.format_inr():>15}  "
                f"{result.monthly_pension.format_inr():>12}  {float(delta):+10.2%}"
            )


if __name__ == "__main__":
    main()
