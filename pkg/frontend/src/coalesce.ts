/** Debounced, latest-wins dispatch of evaluate requests.
 *
 * Rapid slider movement funnels through here: each change restarts a short
 * debounce window, at most one request is ever in flight, and a change made
 * while a request runs is replayed once it settles. The final displayed
 * state therefore always corresponds to the final slider position.
 */

export type Send<T> = (payload: T) => Promise<void>;

export class RequestCoalescer<T> {
  private pending: T | null = null;
  private inflight = false;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly send: Send<T>,
    private readonly debounceMs = 150,
    private readonly onError: (error: unknown) => void = () => {},
  ) {}

  /** Schedule a payload; supersedes anything not yet sent. */
  request(payload: T): void {
    this.pending = payload;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.flush();
    }, this.debounceMs);
  }

  /** True while a request is on the wire. */
  get busy(): boolean {
    return this.inflight;
  }

  private async flush(): Promise<void> {
    if (this.inflight || this.pending === null) return;
    const payload = this.pending;
    this.pending = null;
    this.inflight = true;
    try {
      await this.send(payload);
    } catch (error) {
      this.onError(error);
    } finally {
      this.inflight = false;
      if (this.pending !== null) void this.flush();
    }
  }
}
