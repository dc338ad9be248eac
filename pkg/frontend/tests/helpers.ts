/**
 * Test doubles: a fixture-backed fake server (real engine payloads
 * captured from the backend, keyed by exact request body) and an
 * in-memory scenario store implementing the API's concurrency
 * contract.  Unknown request bodies fail loudly — the controller must
 * emit byte-identical bodies to the ones the engine answered.
 */

import fixtures from './fixtures/engine_responses.json';

interface FixtureEntry {
  name: string;
  path: string;
  body: unknown;
  response: unknown;
}

type Scenario = {
  id: string;
  name: string;
  profile: unknown;
  overrides: unknown;
  created_at: string;
  updated_at: string;
};

export function stableStringify(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(stableStringify).join(',')}]`;
  }
  if (value !== null && typeof value === 'object') {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([k, v]) => `${JSON.stringify(k)}:${stableStringify(v)}`);
    return `{${entries.join(',')}}`;
  }
  return JSON.stringify(value);
}

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

export class FakeServer {
  readonly requests: { path: string; body: unknown }[] = [];
  private readonly byKey = new Map<string, FixtureEntry>();
  private readonly scenarios = new Map<string, Scenario>();
  private clock = 0;
  private nextId = 1;

  constructor() {
    for (const entry of fixtures as FixtureEntry[]) {
      this.byKey.set(`${entry.path}|${stableStringify(entry.body)}`, entry);
    }
  }

  /** Look up the canned response for a named fixture. */
  fixture(name: string): FixtureEntry {
    for (const entry of fixtures as FixtureEntry[]) {
      if (entry.name === name) return entry;
    }
    throw new Error(`no fixture ${name}`);
  }

  seedScenario(name: string, profile: unknown, overrides: unknown): Scenario {
    return this.createScenario({ name, profile, overrides });
  }

  private stamp(): string {
    this.clock += 1;
    return `2026-01-01T00:00:00.${String(this.clock).padStart(6, '0')}+00:00`;
  }

  private createScenario(body: { name: string; profile: unknown; overrides?: unknown }): Scenario {
    const stampValue = this.stamp();
    const record: Scenario = {
      id: `scn-${this.nextId++}`,
      name: body.name,
      profile: body.profile,
      overrides: body.overrides ?? {},
      created_at: stampValue,
      updated_at: stampValue,
    };
    this.scenarios.set(record.id, record);
    return record;
  }

  fetch = async (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input);
    const path = url.pathname;
    const method = init?.method ?? (init?.body ? 'POST' : 'GET');
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    this.requests.push({ path, body });

    if (path === '/api/v1/project' || path === '/api/v1/sweep') {
      const entry = this.byKey.get(`${path}|${stableStringify(body)}`);
      if (!entry) {
        throw new Error(`no fixture for ${path} body ${stableStringify(body)}`);
      }
      return jsonResponse(200, entry.response);
    }

    if (path === '/api/v1/scenarios' && method === 'POST') {
      return jsonResponse(201, this.createScenario(body));
    }
    if (path === '/api/v1/scenarios' && method === 'GET') {
      const list = [...this.scenarios.values()].sort((a, b) =>
        a.updated_at < b.updated_at ? 1 : -1,
      );
      return jsonResponse(200, { scenarios: list });
    }
    const match = path.match(/^\/api\/v1\/scenarios\/(.+)$/);
    if (match) {
      const id = decodeURIComponent(match[1]!);
      const record = this.scenarios.get(id);
      if (!record) return jsonResponse(404, { error: `unknown scenario ${id}` });
      if (method === 'GET') return jsonResponse(200, record);
      if (method === 'DELETE') {
        this.scenarios.delete(id);
        return new Response(null, { status: 204 });
      }
      if (method === 'PUT') {
        if (body.expected_updated_at !== record.updated_at) {
          return jsonResponse(409, { error: `scenario ${id} changed at ${record.updated_at}` });
        }
        const updated: Scenario = {
          ...record,
          name: body.name ?? record.name,
          profile: body.profile ?? record.profile,
          overrides: body.overrides ?? record.overrides,
          updated_at: this.stamp(),
        };
        this.scenarios.set(id, updated);
        return jsonResponse(200, updated);
      }
    }
    return jsonResponse(500, { error: `unhandled ${method} ${path}` });
  };
}

/** A fetch whose responses resolve only when the test says so. */
export class ManualServer {
  readonly pending: {
    path: string;
    body: unknown;
    respond: (payload: unknown) => void;
    reject: (error: Error) => void;
  }[] = [];

  fetch = (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input);
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    return new Promise<Response>((resolve, reject) => {
      this.pending.push({
        path: url.pathname,
        body,
        respond: (payload) => resolve(jsonResponse(200, payload)),
        reject,
      });
    });
  };

  /** Resolve the pending request at `index` with a payload. */
  respond(index: number, payload: unknown): void {
    const entry = this.pending[index];
    if (!entry) throw new Error(`no pending request ${index}`);
    entry.respond(payload);
  }
}

export async function settle(): Promise<void> {
  // drain the microtask queue a few times so chained awaits finish
  for (let i = 0; i < 10; i++) await Promise.resolve();
}
