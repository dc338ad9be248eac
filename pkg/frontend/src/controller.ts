/**
 * Planner controller: owns state, talks to the API, exposes a view
 * model of ready-to-render strings.
 *
 * All pension arithmetic happens server-side.  Slider changes debounce
 * into a single refresh; responses pass a supersession gate so a stale
 * in-flight result can never overwrite a newer one.  On API failure
 * the last good result stays on screen next to a non-blocking banner.
 */

import { ApiClient, StaleScenarioError } from './api.js';
import { DEBOUNCE_MS } from './config.js';
import { debounce } from './debounce.js';
import { donutSegments, type DonutSegments } from './donut.js';
import { formatPaiseAsRupees, formatPaiseExact, formatRatePercent } from './format.js';
import {
  CAP_TO_FUND,
  DEFAULT_PROFILE,
  DEFAULT_SLIDERS,
  RETURN_VALUE_TO_CAP,
  buildOverrides,
  buildProfile,
  clampSlider,
  decimalToPercent,
  paiseToRupees,
  type ProfileInputs,
  type ReturnSource,
  type SliderName,
  type SliderState,
} from './state.js';
import { ResponseGate } from './supersession.js';
import type {
  OverridesJson,
  ProjectRequestBody,
  ProjectionResultJson,
  RateJson,
  SavedScenarioJson,
  SweepRequestBody,
} from './types.js';

export interface ViewModel {
  pensionText: string;
  corpusText: string;
  lumpsumText: string;
  annuityText: string;
  ratioText: string;
  lastDrawnText: string;
  returnText: string;
  conventionText: string;
  opsPensionText: string | null;
  opsRatioText: string | null;
  npsPensionText: string | null;
  npsRatioText: string | null;
  donut: DonutSegments | null;
  error: string | null;
  scenarios: SavedScenarioJson[];
  selectedScenarioId: string | null;
}

interface ProjectionPair {
  nps: ProjectionResultJson;
  ops: ProjectionResultJson;
  derivedReturn: RateJson | null;
}

const EMPTY_TEXT = '—';

export class PlannerController {
  profile: ProfileInputs = { ...DEFAULT_PROFILE };
  sliders: SliderState = { ...DEFAULT_SLIDERS };
  returnSource: ReturnSource = 'default';

  private derivedReturn: RateJson | null = null;
  private lastNps: ProjectionResultJson | null = null;
  private lastOps: ProjectionResultJson | null = null;
  private error: string | null = null;
  private scenarios: SavedScenarioJson[] = [];
  private selectedScenarioId: string | null = null;

  private readonly gate = new ResponseGate();
  private readonly listeners = new Set<() => void>();
  private readonly scheduleRefresh: ReturnType<typeof debounce<[]>>;

  constructor(
    private readonly api: ApiClient,
    options: { debounceMs?: number } = {},
  ) {
    this.scheduleRefresh = debounce(() => {
      void this.refresh();
    }, options.debounceMs ?? DEBOUNCE_MS);
  }

  onChange(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  // -- input handling ------------------------------------------------------

  setSlider(name: SliderName, value: number): void {
    const clamped = clampSlider(name, value, this.profile.appointmentAge);
    if (name === 'equityCapPct') {
      this.returnSource = 'equityCap';
      this.derivedReturn = null;
    } else if (name === 'expectedReturnPct') {
      this.returnSource = 'manual';
    }
    this.sliders = { ...this.sliders, [name]: clamped };
    this.notify();
    this.scheduleRefresh();
  }

  setProfileInput(name: keyof ProfileInputs, value: number): void {
    if (!Number.isFinite(value) || value < 0) return;
    this.profile = { ...this.profile, [name]: value };
    if (name === 'appointmentAge') {
      this.sliders = {
        ...this.sliders,
        retirementAge: clampSlider('retirementAge', this.sliders.retirementAge, value),
      };
    }
    this.notify();
    this.scheduleRefresh();
  }

  applyPreset(preset: Partial<SliderState>): void {
    for (const [name, value] of Object.entries(preset) as [SliderName, number][]) {
      this.sliders = { ...this.sliders, [name]: clampSlider(name, value, this.profile.appointmentAge) };
    }
    this.notify();
    this.scheduleRefresh();
  }

  // -- requests ------------------------------------------------------------

  private currentBodies(): { nps: ProjectRequestBody | SweepRequestBody; ops: ProjectRequestBody; viaSweep: boolean } {
    const profile = buildProfile(this.profile, this.sliders);
    const ops: ProjectRequestBody = { profile, scheme: 'OPS' };
    if (this.returnSource === 'equityCap' && this.derivedReturn === null) {
      // the return for this equity ceiling is an engine fact; fetch it
      // through a single-point lifecycle sweep and use that row's result
      const overrides = buildOverrides(this.sliders, 'default', null);
      const fund = CAP_TO_FUND[this.sliders.equityCapPct];
      if (fund === undefined) throw new Error(`no fund for cap ${this.sliders.equityCapPct}`);
      const sweep: SweepRequestBody = {
        base: profile,
        parameter: 'LifecycleFund',
        grid: [fund],
        overrides,
      };
      return { nps: sweep, ops, viaSweep: true };
    }
    const overrides = buildOverrides(this.sliders, this.returnSource, this.derivedReturn);
    return { nps: { profile, scheme: 'NPS', overrides }, ops, viaSweep: false };
  }

  /** Issue the projection pair now (bypassing the debounce). */
  refresh(): Promise<void> {
    const { nps, ops, viaSweep } = this.currentBodies();
    return this.gate.dispatch(
      async (): Promise<ProjectionPair> => {
        const opsPromise = this.api.project(ops);
        if (viaSweep) {
          const [table, opsResult] = await Promise.all([
            this.api.sweep(nps as SweepRequestBody),
            opsPromise,
          ]);
          const row = table.rows[0];
          if (!row || !row.ok || !row.result) {
            throw new Error(row?.error ?? 'sweep returned no rows');
          }
          return { nps: row.result, ops: opsResult, derivedReturn: row.derived_return ?? null };
        }
        const [npsResult, opsResult] = await Promise.all([
          this.api.project(nps as ProjectRequestBody),
          opsPromise,
        ]);
        return { nps: npsResult, ops: opsResult, derivedReturn: this.derivedReturn };
      },
      (pair) => {
        this.lastNps = pair.nps;
        this.lastOps = pair.ops;
        this.derivedReturn = pair.derivedReturn;
        this.error = null;
        this.notify();
      },
      (error) => {
        this.error = error instanceof Error ? error.message : String(error);
        this.notify();
      },
    );
  }

  // -- scenario shelf --------------------------------------------------------

  async refreshScenarios(): Promise<void> {
    try {
      this.scenarios = (await this.api.listScenarios()).scenarios;
      this.notify();
    } catch (error) {
      this.setError(error);
    }
  }

  async saveScenario(name: string): Promise<SavedScenarioJson | null> {
    try {
      const profile = buildProfile(this.profile, this.sliders);
      const overrides = buildOverrides(this.sliders, this.returnSource, this.derivedReturn);
      const record = await this.api.createScenario({ name, profile, overrides });
      this.selectedScenarioId = record.id;
      await this.refreshScenarios();
      return record;
    } catch (error) {
      this.setError(error);
      return null;
    }
  }

  /** Restore every slider from a saved scenario, then reproject. */
  async loadScenario(id: string): Promise<void> {
    try {
      const record = await this.api.getScenario(id);
      this.applyScenario(record);
      this.selectedScenarioId = id;
      this.notify();
      await this.refresh();
    } catch (error) {
      this.setError(error);
    }
  }

  private applyScenario(record: SavedScenarioJson): void {
    const p = record.profile;
    this.profile = {
      appointmentAge: p.appointment_age,
      basicPayRupees: paiseToRupees(p.basic_pay.paise),
      daPct: decimalToPercent(p.da_rate.value),
      grossSalaryRupees: paiseToRupees(p.gross_salary.paise),
      growthPct: decimalToPercent(p.combined_growth.value),
      employeeRatePct: decimalToPercent(p.employee_contrib.value),
    };
    const overrides: OverridesJson = record.overrides ?? {};
    const savedReturn = overrides.annual_return ?? null;
    const capForReturn = savedReturn ? RETURN_VALUE_TO_CAP[savedReturn.value] : undefined;
    this.sliders = {
      annuitySharePct: overrides.annuity_share
        ? decimalToPercent(overrides.annuity_share.value)
        : DEFAULT_SLIDERS.annuitySharePct,
      employerRatePct: decimalToPercent(p.employer_contrib.value),
      equityCapPct: capForReturn ?? DEFAULT_SLIDERS.equityCapPct,
      expectedReturnPct: savedReturn
        ? decimalToPercent(savedReturn.value)
        : DEFAULT_SLIDERS.expectedReturnPct,
      retirementAge: p.retirement_age,
    };
    if (savedReturn === null) {
      this.returnSource = 'default';
      this.derivedReturn = null;
    } else if (capForReturn !== undefined) {
      this.returnSource = 'equityCap';
      this.derivedReturn = savedReturn;
    } else {
      this.returnSource = 'manual';
      this.derivedReturn = null;
    }
  }

  async renameScenario(id: string, name: string): Promise<void> {
    const known = this.scenarios.find((s) => s.id === id);
    if (!known) return;
    try {
      await this.api.updateScenario(id, { expected_updated_at: known.updated_at, name });
      await this.refreshScenarios();
    } catch (error) {
      if (error instanceof StaleScenarioError) {
        this.error = 'scenario changed elsewhere — reload?';
        this.notify();
        return;
      }
      this.setError(error);
    }
  }

  async deleteScenario(id: string): Promise<void> {
    try {
      await this.api.deleteScenario(id);
      if (this.selectedScenarioId === id) this.selectedScenarioId = null;
      await this.refreshScenarios();
    } catch (error) {
      this.setError(error);
    }
  }

  private setError(error: unknown): void {
    this.error = error instanceof Error ? error.message : String(error);
    this.notify();
  }

  // -- view model -----------------------------------------------------------

  viewModel(): ViewModel {
    const nps = this.lastNps;
    const ops = this.lastOps;
    const breakdown = nps?.breakdown ?? null;
    return {
      pensionText: nps ? formatPaiseAsRupees(nps.monthly_pension.paise) : EMPTY_TEXT,
      corpusText: breakdown ? formatPaiseExact(breakdown.corpus.paise) : EMPTY_TEXT,
      lumpsumText: breakdown ? formatPaiseExact(breakdown.lumpsum.paise) : EMPTY_TEXT,
      annuityText: breakdown ? formatPaiseExact(breakdown.annuity_principal.paise) : EMPTY_TEXT,
      ratioText: nps ? formatRatePercent(nps.replacement_ratio.value) : EMPTY_TEXT,
      lastDrawnText: nps ? formatPaiseAsRupees(nps.last_drawn_salary.paise) : EMPTY_TEXT,
      returnText: this.describeReturn(),
      conventionText: nps ? `${nps.convention.rate_basis}+${nps.convention.timing}` : EMPTY_TEXT,
      opsPensionText: ops ? formatPaiseAsRupees(ops.monthly_pension.paise) : null,
      opsRatioText: ops ? formatRatePercent(ops.replacement_ratio.value) : null,
      npsPensionText: nps ? formatPaiseAsRupees(nps.monthly_pension.paise) : null,
      npsRatioText: nps ? formatRatePercent(nps.replacement_ratio.value) : null,
      donut: breakdown
        ? donutSegments(breakdown.lumpsum.paise, breakdown.annuity_principal.paise)
        : null,
      error: this.error,
      scenarios: this.scenarios,
      selectedScenarioId: this.selectedScenarioId,
    };
  }

  private describeReturn(): string {
    if (this.returnSource === 'equityCap' && this.derivedReturn) {
      return formatRatePercent(this.derivedReturn.value);
    }
    if (this.returnSource === 'manual') {
      return `${this.sliders.expectedReturnPct}%`;
    }
    return this.lastNps ? '9.00%' : EMPTY_TEXT;
  }
}
