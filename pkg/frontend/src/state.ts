/**
 * Planner state: profile inputs, slider values, and the builders that
 * turn them into exact wire payloads.
 *
 * Slider values clamp to engine-legal ranges.  The equity-cap slider
 * snaps to the four lifecycle ceilings, since the engine derives a
 * portfolio return only for those named funds — the derived return is
 * always fetched from the API, never computed here.
 */

import type { OverridesJson, ProfileJson, RateJson } from './types.js';

export interface ProfileInputs {
  appointmentAge: number;
  basicPayRupees: number;
  daPct: number;
  grossSalaryRupees: number;
  growthPct: number;
  employeeRatePct: number;
}

export interface SliderState {
  annuitySharePct: number;
  employerRatePct: number;
  equityCapPct: number;
  expectedReturnPct: number;
  retirementAge: number;
}

export type ReturnSource = 'default' | 'equityCap' | 'manual';

export type SliderName = keyof SliderState;

export const EQUITY_CAP_STOPS = [15, 25, 50, 75] as const;

export const SLIDER_LIMITS: Record<SliderName, { min: number; max: number }> = {
  annuitySharePct: { min: 0, max: 100 },
  employerRatePct: { min: 0, max: 30 },
  equityCapPct: { min: 0, max: 75 },
  expectedReturnPct: { min: 0, max: 15 },
  retirementAge: { min: 18, max: 75 },
};

export const DEFAULT_PROFILE: ProfileInputs = {
  appointmentAge: 25,
  basicPayRupees: 56_100,
  daPct: 42,
  grossSalaryRupees: 110_000,
  growthPct: 9,
  employeeRatePct: 10,
};

export const DEFAULT_SLIDERS: SliderState = {
  annuitySharePct: 75,
  employerRatePct: 14,
  equityCapPct: 15,
  expectedReturnPct: 9,
  retirementAge: 60,
};

/** The published improved-pension preset: 17% employer at 75% share. */
export const FIG3_PRESET: Partial<SliderState> = {
  annuitySharePct: 75,
  employerRatePct: 17,
};

/** Lifecycle fund name per equity-cap stop. */
export const CAP_TO_FUND: Record<number, string> = {
  15: 'Default',
  25: 'Conservative',
  50: 'Moderate',
  75: 'Aggressive',
};

/** Restore the equity slider from a saved derived-return value. */
export const RETURN_VALUE_TO_CAP: Record<string, number> = {
  '0.079': 15,
  '0.082': 25,
  '0.0895': 50,
  '0.095': 75,
};

export function clampSlider(name: SliderName, value: number, appointmentAge = 25): number {
  const { min, max } = SLIDER_LIMITS[name];
  let clamped = Math.min(max, Math.max(min, value));
  if (name === 'retirementAge') {
    clamped = Math.max(appointmentAge + 1, Math.round(clamped));
  }
  if (name === 'equityCapPct') {
    let nearest: number = EQUITY_CAP_STOPS[0];
    for (const stop of EQUITY_CAP_STOPS) {
      if (Math.abs(stop - clamped) < Math.abs(nearest - clamped)) nearest = stop;
    }
    clamped = nearest;
  }
  return clamped;
}

/**
 * Render a percent number (at most four decimal places) as the exact
 * decimal-fraction string the wire format expects: 17 -> "0.17",
 * 7.9 -> "0.079".  Integer arithmetic after one guarded rounding, so
 * float artifacts cannot leak into the payload.
 */
export function percentToDecimal(pct: number): string {
  const scaled = Math.round(pct * 10_000); // 1e-4 percent units
  if (!Number.isSafeInteger(scaled) || scaled < 0) throw new Error(`bad percent ${pct}`);
  const whole = Math.trunc(scaled / 1_000_000);
  const frac = (scaled % 1_000_000).toString().padStart(6, '0').replace(/0+$/, '');
  return frac ? `${whole}.${frac}` : `${whole}`;
}

function rate(pct: number, kind: RateJson['kind']): RateJson {
  return { value: percentToDecimal(pct), period: 'PerYear', kind };
}

export function buildProfile(inputs: ProfileInputs, sliders: SliderState): ProfileJson {
  return {
    appointment_age: inputs.appointmentAge,
    retirement_age: sliders.retirementAge,
    basic_pay: { paise: inputs.basicPayRupees * 100 },
    da_rate: rate(inputs.daPct, 'DA'),
    gross_salary: { paise: inputs.grossSalaryRupees * 100 },
    combined_growth: rate(inputs.growthPct, 'Growth'),
    employee_contrib: rate(inputs.employeeRatePct, 'Contribution'),
    employer_contrib: rate(sliders.employerRatePct, 'Contribution'),
  };
}

/**
 * Overrides for a projection.  The annuity share always travels; the
 * annual return travels when the user picked one (manual slider) or
 * when the equity-cap slider supplied an API-derived return.
 */
export function buildOverrides(
  sliders: SliderState,
  returnSource: ReturnSource,
  derivedReturn: RateJson | null,
): OverridesJson {
  const overrides: OverridesJson = {
    annuity_share: rate(sliders.annuitySharePct, 'Ratio'),
  };
  if (returnSource === 'manual') {
    overrides.annual_return = rate(sliders.expectedReturnPct, 'Return');
  } else if (returnSource === 'equityCap' && derivedReturn) {
    overrides.annual_return = derivedReturn;
  }
  return overrides;
}

/** Parse a wire decimal-fraction string back into a percent number. */
export function decimalToPercent(value: string): number {
  return Number.parseFloat(value) * 100;
}

export function paiseToRupees(paise: number): number {
  if (paise % 100 !== 0) throw new Error(`expected whole-rupee paise, got ${paise}`);
  return paise / 100;
}
