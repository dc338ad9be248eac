/**
 * Typed client for the pensionlab HTTP API.
 *
 * The fetch implementation is injectable so tests can run without a
 * network or a DOM.
 */

import type {
  FieldErrorJson,
  ProjectRequestBody,
  ProjectionResultJson,
  SavedScenarioJson,
  SweepRequestBody,
  SweepTableJson,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly fieldErrors: FieldErrorJson[] = [],
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** 409: somebody else changed the scenario since we read it. */
export class StaleScenarioError extends ApiError {
  constructor(message: string) {
    super(409, message);
    this.name = 'StaleScenarioError';
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function fail(response: Response): Promise<never> {
  let message = `HTTP ${response.status}`;
  let fieldErrors: FieldErrorJson[] = [];
  try {
    const payload = (await response.json()) as { error?: string; errors?: FieldErrorJson[] };
    if (payload.error) message = payload.error;
    if (payload.errors) {
      fieldErrors = payload.errors;
      message = fieldErrors.map((e) => `${e.field}: ${e.message}`).join('; ');
    }
  } catch {
    // non-JSON error body; keep the status message
  }
  if (response.status === 409) throw new StaleScenarioError(message);
  throw new ApiError(response.status, message, fieldErrors);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => globalThis.fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!response.ok) await fail(response);
    return (await response.json()) as T;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) await fail(response);
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  project(body: ProjectRequestBody): Promise<ProjectionResultJson> {
    return this.post('/api/v1/project', body);
  }

  sweep(body: SweepRequestBody): Promise<SweepTableJson> {
    return this.post('/api/v1/sweep', body);
  }

  listScenarios(): Promise<{ scenarios: SavedScenarioJson[] }> {
    return this.request('/api/v1/scenarios');
  }

  getScenario(id: string): Promise<SavedScenarioJson> {
    return this.request(`/api/v1/scenarios/${encodeURIComponent(id)}`);
  }

  createScenario(body: {
    name: string;
    profile: ProjectRequestBody['profile'];
    overrides?: ProjectRequestBody['overrides'];
  }): Promise<SavedScenarioJson> {
    return this.post('/api/v1/scenarios', body);
  }

  updateScenario(
    id: string,
    body: {
      expected_updated_at: string;
      name?: string;
      profile?: ProjectRequestBody['profile'];
      overrides?: ProjectRequestBody['overrides'];
    },
  ): Promise<SavedScenarioJson> {
    return this.request(`/api/v1/scenarios/${encodeURIComponent(id)}`, {
      method: 'PUT',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  deleteScenario(id: string): Promise<void> {
    return this.request(`/api/v1/scenarios/${encodeURIComponent(id)}`, { method: 'DELETE' });
  }
}
