import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";
import { fixture, scriptedFetch } from "./helpers";

describe("ApiClient", () => {
  it("creates sessions from service responses", async () => {
    const api = new ApiClient(
      "",
      scriptedFetch([
        { method: "POST", path: /\/api\/sessions$/, responses: [{ body: fixture("A3.session.json") }] },
      ]),
    );
    const session = await api.createSession('{"n": 3, "b": [[0,1,0],[-1,0,1],[0,-1,0]]}');
    expect(session.matrix.n).toBe(3);
    expect(session.history).toEqual([]);
    expect(session.canonical_key).toMatch(/^[0-9a-f]{64}$/);
  });

  it("raises ApiError with the service payload on failures", async () => {
    const api = new ApiClient(
      "",
      scriptedFetch([
        {
          method: "POST",
          path: /\/mutate$/,
          responses: [{ status: 409, body: '{"error": "vertex 7 out of range"}' }],
        },
      ]),
    );
    const err = await api.mutate("abc", 7).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(409);
    expect(err.payload).toEqual({ error: "vertex 7 out of range" });
  });

  it("returns pending analyses with their poll URL", async () => {
    const pending = '{"status": "pending", "poll": "/api/analyses/k", "canonical_key": "k"}';
    const ready = fixture("A3.analysis.json");
    const api = new ApiClient(
      "",
      scriptedFetch([
        { method: "GET", path: /\/analysis$/, responses: [{ status: 202, body: pending }] },
        { method: "GET", path: /\/api\/analyses\/k$/, responses: [{ body: ready }] },
      ]),
    );
    const first = await api.analysis("abc");
    expect(first.kind).toBe("pending");
    if (first.kind !== "pending") throw new Error("unreachable");
    const second = await api.pollAnalysis(first.poll);
    expect(second.kind).toBe("ready");
    if (second.kind !== "ready") throw new Error("unreachable");
    expect(second.raw).toBe(ready);
  });

  it("flags unavailable analyses without throwing", async () => {
    const body = '{"error": "analysis unavailable", "reason": "no finite model", "mutation_type": "MutationInfinite"}';
    const api = new ApiClient(
      "",
      scriptedFetch([{ method: "GET", path: /\/analysis$/, responses: [{ status: 422, body }] }]),
    );
    const result = await api.analysis("abc");
    expect(result.kind).toBe("unavailable");
    if (result.kind !== "unavailable") throw new Error("unreachable");
    expect(result.error.mutation_type).toBe("MutationInfinite");
  });
});
