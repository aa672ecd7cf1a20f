/**
 * Session controller: all console behavior without any DOM access, so the
 * browser binding stays a thin layer and the logic is testable headless.
 *
 * One in-flight request at a time; a 409 on /answer means the pending
 * query went stale, which is resolved by refetching /next.
 */

import { ApiError, KspaceClient, type Query, type SessionStats } from "./api.js";
import { type HistoryEntry } from "./view.js";

export type Phase = "idle" | "asking" | "exhausted" | "finished";

export interface ConsoleState {
  phase: Phase;
  pending: Query | null;
  stats: SessionStats | null;
  history: HistoryEntry[];
  whatIf: string | null; // states_if_accept for the pending query
  error: string | null;
}

export class SessionController {
  readonly state: ConsoleState = {
    phase: "idle",
    pending: null,
    stats: null,
    history: [],
    whatIf: null,
    error: null,
  };
  private busy = false;

  constructor(
    private readonly client: KspaceClient,
    private readonly sessionId: string,
    private readonly onChange: (state: ConsoleState) => void = () => {},
  ) {}

  private notify(): void {
    this.onChange(this.state);
  }

  /** Fetch the next query (also the recovery path after a stale answer). */
  async refresh(): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      const next = await this.client.next(this.sessionId);
      this.state.stats = next.stats;
      this.state.whatIf = null;
      this.state.error = null;
      if (next.exhausted || !next.query) {
        this.state.phase = "exhausted";
        this.state.pending = null;
      } else {
        this.state.phase = "asking";
        this.state.pending = next.query;
      }
    } catch (err) {
      this.state.error = String(err);
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  /** Preview the state count a yes answer would leave, without committing. */
  async previewWhatIf(): Promise<void> {
    if (this.busy || !this.state.pending) return;
    this.busy = true;
    try {
      const got = await this.client.whatif(this.sessionId, this.state.pending);
      this.state.whatIf = got.states_if_accept;
      this.state.error = null;
    } catch (err) {
      this.state.error = String(err);
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  /** Commit a yes/no answer for the pending query, then advance. */
  async answer(accept: boolean): Promise<void> {
    if (this.busy || !this.state.pending) return;
    const query = this.state.pending;
    this.busy = true;
    try {
      const got = await this.client.answer(this.sessionId, query, accept);
      this.state.stats = got.stats;
      this.state.history.push({ query, accepted: accept });
      this.state.pending = null;
      this.state.whatIf = null;
      this.state.error = null;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // stale query: drop it and fall through to a fresh /next
        this.state.pending = null;
      } else {
        this.state.error = String(err);
        this.busy = false;
        this.notify();
        return;
      }
    } finally {
      this.busy = false;
    }
    await this.refresh();
  }

  async finish(): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      await this.client.finish(this.sessionId);
      this.state.phase = "finished";
      this.state.pending = null;
    } catch (err) {
      this.state.error = String(err);
    } finally {
      this.busy = false;
      this.notify();
    }
  }
}
