/** Planner configuration constants. */

/** Debounce interval for slider streams, in milliseconds. */
export const DEBOUNCE_MS = 150;

export const DEFAULT_API_BASE = 'http://127.0.0.1:8080';

/**
 * Resolve the service base URL: `?api=` query parameter wins, then a
 * `window.PENSIONLAB_API` global, then the default.
 */
export function resolveApiBase(href: string, globals: Record<string, unknown>): string {
  try {
    const url = new URL(href);
    const fromQuery = url.searchParams.get('api');
    if (fromQuery) return fromQuery.replace(/\/$/, '');
  } catch {
    // non-URL href (tests); fall through
  }
  const fromGlobal = globals['PENSIONLAB_API'];
  if (typeof fromGlobal === 'string' && fromGlobal) return fromGlobal.replace(/\/$/, '');
  return DEFAULT_API_BASE;
}
