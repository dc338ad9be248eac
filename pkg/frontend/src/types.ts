/**
 * Wire types for the pensionlab HTTP API.
 *
 * Money is always integer paise, rates are decimal strings — no value
 * on this side ever passes through floating point before display.
 */

export interface MoneyJson {
  paise: number;
}

export interface RateJson {
  value: string;
  period: 'PerYear' | 'PerMonth';
  kind: 'Growth' | 'Return' | 'Annuity' | 'Contribution' | 'DA' | 'Ratio';
}

export interface ConventionJson {
  rate_basis: 'NominalMonthly' | 'EffectiveAnnual';
  timing: 'Due' | 'Ordinary';
}

export interface ProfileJson {
  appointment_age: number;
  retirement_age: number;
  basic_pay: MoneyJson;
  da_rate: RateJson;
  gross_salary: MoneyJson;
  combined_growth: RateJson;
  employee_contrib: RateJson;
  employer_contrib: RateJson;
}

export interface OverridesJson {
  annual_return?: RateJson;
  annuity_share?: RateJson;
  annuity_rate?: RateJson;
  convention?: ConventionJson;
  indexing_mode?: 'Flat' | 'WageIndexed';
  pinned_corpus?: MoneyJson;
}

export interface BreakdownJson {
  corpus: MoneyJson;
  lumpsum: MoneyJson;
  annuity_principal: MoneyJson;
  lumpsum_share: RateJson;
  annuity_share: RateJson;
  convention: ConventionJson;
}

export interface ProjectionResultJson {
  scheme: 'OPS' | 'NPS';
  monthly_pension: MoneyJson;
  monthly_pension_unrounded_paise: number;
  last_drawn_salary: MoneyJson;
  last_drawn_salary_unrounded_paise: number;
  replacement_ratio: RateJson;
  profile: ProfileJson;
  convention: ConventionJson;
  breakdown: BreakdownJson | null;
}

export interface ProjectRequestBody {
  profile: ProfileJson;
  scheme: 'OPS' | 'NPS';
  overrides?: OverridesJson;
}

export interface SweepRowJson {
  value: string;
  ok: boolean;
  result?: ProjectionResultJson;
  error?: string;
  derived_return?: RateJson;
}

export interface SweepTableJson {
  parameter: string;
  convention: ConventionJson;
  engine_version: string;
  generated_at: string;
  rows: SweepRowJson[];
}

export interface SweepRequestBody {
  base: ProfileJson;
  parameter: 'AnnuityShare' | 'EmployerRate' | 'LifecycleFund' | 'ExpectedReturn';
  grid: string[];
  overrides?: OverridesJson;
}

export interface SavedScenarioJson {
  id: string;
  name: string;
  profile: ProfileJson;
  overrides: OverridesJson;
  created_at: string;
  updated_at: string;
}

export interface FieldErrorJson {
  field: string;
  message: string;
}
