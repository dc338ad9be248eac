/**
 * Request supersession gate.
 *
 * Every dispatch takes a fresh token; when a response lands, its
 * callback runs only if no later dispatch happened in the meantime.
 * Stale responses — including failures — are discarded silently, so
 * out-of-order arrivals can never repaint the screen with old data.
 */
export class ResponseGate {
  private latest = 0;

  /** Invalidate all in-flight dispatches without starting a new one. */
  invalidate(): void {
    this.latest++;
  }

  async dispatch<T>(
    request: () => Promise<T>,
    apply: (value: T) => void,
    onError?: (error: unknown) => void,
  ): Promise<void> {
    this.latest++;
    const token = this.latest;
    try {
      const value = await request();
      if (token === this.latest) apply(value);
    } catch (error) {
      if (token === this.latest && onError) onError(error);
    }
  }
}
