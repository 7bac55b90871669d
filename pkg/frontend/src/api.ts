/** Thin typed client for the toolkit service. The fetch function is
 * injected so tests can replay recorded responses byte-for-byte. */

import type { AnalysisError, AnalysisReport, SessionState } from "./types";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public status: number,
    public payload: unknown,
  ) {
    super(`request failed with status ${status}`);
  }
}

/** Analysis responses keep the raw body so the UI can display (and tests can
 * compare) exactly what the service sent. */
export type AnalysisResult =
  | { kind: "ready"; raw: string; report: AnalysisReport }
  | { kind: "pending"; poll: string; canonicalKey: string }
  | { kind: "unavailable"; raw: string; error: AnalysisError };

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike,
  ) {}

  private url(path: string): string {
    return this.baseUrl + path;
  }

  private async expectSession(resp: Response): Promise<SessionState> {
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.json());
    }
    return (await resp.json()) as SessionState;
  }

  async createSession(matrixJson: string): Promise<SessionState> {
    const resp = await this.fetchFn(this.url("/api/sessions"), {
      method: "POST",
      body: matrixJson,
    });
    return this.expectSession(resp);
  }

  async getSession(id: string): Promise<SessionState> {
    return this.expectSession(await this.fetchFn(this.url(`/api/sessions/${id}`)));
  }

  async mutate(id: string, k: number): Promise<SessionState> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${id}/mutate`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ k }),
    });
    return this.expectSession(resp);
  }

  async undo(id: string): Promise<SessionState> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${id}/undo`), {
      method: "POST",
    });
    return this.expectSession(resp);
  }

  async presentation(id: string): Promise<string> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${id}/presentation`));
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.json());
    }
    return resp.text();
  }

  private async analysisResult(resp: Response): Promise<AnalysisResult> {
    const raw = await resp.text();
    if (resp.status === 202) {
      const body = JSON.parse(raw) as { poll: string; canonical_key: string };
      return { kind: "pending", poll: body.poll, canonicalKey: body.canonical_key };
    }
    if (resp.status === 422) {
      return { kind: "unavailable", raw, error: JSON.parse(raw) as AnalysisError };
    }
    if (!resp.ok) {
      throw new ApiError(resp.status, JSON.parse(raw));
    }
    return { kind: "ready", raw, report: JSON.parse(raw) as AnalysisReport };
  }

  async analysis(id: string): Promise<AnalysisResult> {
    return this.analysisResult(await this.fetchFn(this.url(`/api/sessions/${id}/analysis`)));
  }

  async pollAnalysis(pollPath: string): Promise<AnalysisResult> {
    return this.analysisResult(await this.fetchFn(this.url(pollPath)));
  }
}
