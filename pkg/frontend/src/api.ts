import type { GraphPayload, IngestReport, PatternRow, StatsPayload, UserRow } from "./types.js";

const VERSION_HEADER = "x-snapshot-version";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export interface Versioned<T> {
  data: T;
  version: number;
}

export interface PatternQuery {
  minSupport: number;
  maxLen?: number;
  maxGap?: number | null;
}

async function unwrap<T>(resp: Response): Promise<Versioned<T>> {
  const version = Number(resp.headers.get(VERSION_HEADER) ?? 0);
  if (!resp.ok) {
    let code = "http_error";
    let message = `${resp.status} ${resp.statusText}`;
    try {
      const body = (await resp.json()) as { error?: string; message?: string };
      if (body.error) code = body.error;
      if (body.message) message = body.message;
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(resp.status, code, message);
  }
  return { data: (await resp.json()) as T, version };
}

export class Client {
  constructor(private base = "") {}

  listUsers(signal?: AbortSignal): Promise<Versioned<UserRow[]>> {
    return fetch(`${this.base}/users`, { signal }).then((r) => unwrap(r));
  }

  graph(user: string, signal?: AbortSignal): Promise<Versioned<GraphPayload>> {
    return fetch(`${this.base}/users/${encodeURIComponent(user)}/graph`, { signal })
      .then((r) => unwrap(r));
  }

  patterns(user: string, query: PatternQuery, signal?: AbortSignal): Promise<Versioned<PatternRow[]>> {
    const params = new URLSearchParams({ min_support: String(query.minSupport) });
    if (query.maxLen !== undefined) params.set("max_len", String(query.maxLen));
    if (query.maxGap !== undefined && query.maxGap !== null) {
      params.set("max_gap", String(query.maxGap));
    }
    const url = `${this.base}/users/${encodeURIComponent(user)}/patterns?${params}`;
    return fetch(url, { signal }).then((r) => unwrap(r));
  }

  stats(user: string, signal?: AbortSignal): Promise<Versioned<StatsPayload>> {
    return fetch(`${this.base}/users/${encodeURIComponent(user)}/stats`, { signal })
      .then((r) => unwrap(r));
  }

  upload(body: Blob | ArrayBuffer): Promise<Versioned<IngestReport>> {
    return fetch(`${this.base}/upload`, { method: "POST", body }).then((r) => unwrap(r));
  }
}
