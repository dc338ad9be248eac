/**
 * DOM wiring for the planner page.  All logic lives in the controller;
 * this file only binds inputs and paints the view model.
 */

import { ApiClient } from './api.js';
import { resolveApiBase } from './config.js';
import { PlannerController } from './controller.js';
import { FIG3_PRESET, SLIDER_LIMITS, type SliderName } from './state.js';

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

const apiBase = resolveApiBase(window.location.href, window as unknown as Record<string, unknown>);
const controller = new PlannerController(new ApiClient(apiBase));

const SLIDERS: { name: SliderName; input: string; label: string; unit: string }[] = [
  { name: 'annuitySharePct', input: 'slider-share', label: 'label-share', unit: '%' },
  { name: 'employerRatePct', input: 'slider-employer', label: 'label-employer', unit: '%' },
  { name: 'equityCapPct', input: 'slider-equity', label: 'label-equity', unit: '%' },
  { name: 'expectedReturnPct', input: 'slider-return', label: 'label-return', unit: '%' },
  { name: 'retirementAge', input: 'slider-retire', label: 'label-retire', unit: ' yrs' },
];

const PROFILE_INPUTS = [
  ['input-age', 'appointmentAge'],
  ['input-basic', 'basicPayRupees'],
  ['input-da', 'daPct'],
  ['input-gross', 'grossSalaryRupees'],
  ['input-growth', 'growthPct'],
  ['input-employee', 'employeeRatePct'],
] as const;

function bindInputs(): void {
  for (const { name, input } of SLIDERS) {
    const el = byId<HTMLInputElement>(input);
    el.min = String(SLIDER_LIMITS[name].min);
    el.max = String(SLIDER_LIMITS[name].max);
    el.addEventListener('input', () => controller.setSlider(name, Number(el.value)));
  }
  for (const [id, key] of PROFILE_INPUTS) {
    const el = byId<HTMLInputElement>(id);
    el.addEventListener('change', () => controller.setProfileInput(key, Number(el.value)));
  }
  byId<HTMLButtonElement>('preset-fig3').addEventListener('click', () => {
    controller.applyPreset(FIG3_PRESET);
  });
  byId<HTMLButtonElement>('scenario-save').addEventListener('click', () => {
    const name = byId<HTMLInputElement>('scenario-name').value.trim();
    if (name) void controller.saveScenario(name);
  });
}

function paintDonut(lumpsumFraction: number): void {
  const circumference = 2 * Math.PI * 54;
  const lump = byId<SVGCircleElement & HTMLElement>('donut-lumpsum');
  lump.setAttribute('stroke-dasharray', `${lumpsumFraction * circumference} ${circumference}`);
}

function paintScenarios(): void {
  const vm = controller.viewModel();
  const shelf = byId<HTMLUListElement>('scenario-list');
  shelf.replaceChildren();
  for (const scenario of vm.scenarios) {
    const item = document.createElement('li');
    if (scenario.id === vm.selectedScenarioId) item.classList.add('selected');
    const title = document.createElement('span');
    title.textContent = scenario.name;
    item.append(title);
    const load = document.createElement('button');
    load.textContent = 'load';
    load.addEventListener('click', () => void controller.loadScenario(scenario.id));
    const rename = document.createElement('button');
    rename.textContent = 'rename';
    rename.addEventListener('click', () => {
      const name = window.prompt('New name', scenario.name);
      if (name) void controller.renameScenario(scenario.id, name);
    });
    const remove = document.createElement('button');
    remove.textContent = 'delete';
    remove.addEventListener('click', () => void controller.deleteScenario(scenario.id));
    item.append(load, rename, remove);
    shelf.append(item);
  }
}

function paint(): void {
  const vm = controller.viewModel();
  byId('readout-pension').textContent = vm.pensionText;
  byId('readout-ratio').textContent = vm.ratioText;
  byId('readout-corpus').textContent = vm.corpusText;
  byId('readout-lumpsum').textContent = vm.lumpsumText;
  byId('readout-annuity').textContent = vm.annuityText;
  byId('readout-last-drawn').textContent = vm.lastDrawnText;
  byId('readout-return').textContent = vm.returnText;
  byId('readout-convention').textContent = vm.conventionText;
  byId('compare-ops-pension').textContent = vm.opsPensionText ?? '—';
  byId('compare-ops-ratio').textContent = vm.opsRatioText ?? '—';
  byId('compare-nps-pension').textContent = vm.npsPensionText ?? '—';
  byId('compare-nps-ratio').textContent = vm.npsRatioText ?? '—';

  for (const { name, input, label, unit } of SLIDERS) {
    byId<HTMLInputElement>(input).value = String(controller.sliders[name]);
    byId(label).textContent = `${controller.sliders[name]}${unit}`;
  }

  const banner = byId('error-banner');
  banner.textContent = vm.error ?? '';
  banner.style.display = vm.error ? 'block' : 'none';

  if (vm.donut) paintDonut(vm.donut.lumpsumFraction);
  paintScenarios();
}

document.addEventListener('DOMContentLoaded', () => {
  bindInputs();
  controller.onChange(paint);
  paint();
  void controller.refresh();
  void controller.refreshScenarios();
});
