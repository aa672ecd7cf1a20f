/**
 * Typed client for the exploration session wire protocol.
 *
 * State counts are decimal strings and are passed through untouched so
 * arbitrary-precision values survive the round trip.
 */

export interface SessionStats {
  states: string;
  rows: number;
  base: number;
  accepted: number;
}

export interface Query {
  premise: string[];
  item: string;
}

export interface NextResponse {
  query?: Query;
  exhausted?: boolean;
  stats: SessionStats;
}

export interface SessionState {
  id: string;
  domain: string[];
  mode: string;
  a_max: number;
  status: string;
  rows: string[];
  base: string[][];
  accepted: Query[];
  rejected: Query[];
  stats: SessionStats;
  snapshot: string;
}

export interface CreateSessionRequest {
  domain: string[];
  mode?: "human" | "oracle";
  hidden_base?: string[][];
  a_max?: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    throw new ApiError(resp.status, JSON.stringify(body.detail ?? body));
  }
  return body as T;
}

export class KspaceClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  createSession(body: CreateSessionRequest): Promise<{ id: string }> {
    return request(this.url("/sessions"), {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  next(id: string): Promise<NextResponse> {
    return request(this.url(`/sessions/${id}/next`));
  }

  answer(id: string, query: Query, accept: boolean): Promise<{ stats: SessionStats }> {
    return request(this.url(`/sessions/${id}/answer`), {
      method: "POST",
      body: JSON.stringify({ ...query, accept }),
    });
  }

  whatif(id: string, query: Query): Promise<{ states_if_accept: string }> {
    return request(this.url(`/sessions/${id}/whatif`), {
      method: "POST",
      body: JSON.stringify(query),
    });
  }

  state(id: string): Promise<SessionState> {
    return request(this.url(`/sessions/${id}/state`));
  }

  finish(id: string): Promise<{ finished: boolean }> {
    return request(this.url(`/sessions/${id}`), { method: "DELETE" });
  }
}
