/** Test helpers: fixture loading and a scripted fetch that replays recorded
 * service responses byte-for-byte. */

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import type { FetchLike } from "../src/api";

export function fixture(name: string): string {
  const path = fileURLToPath(new URL(`../fixtures/${name}`, import.meta.url));
  return readFileSync(path, "utf8");
}

export interface Route {
  method: string;
  path: RegExp;
  /** responses served in order; the last one repeats */
  responses: { status?: number; body: string }[];
}

export function scriptedFetch(routes: Route[]): FetchLike {
  const counters = new Map<Route, number>();
  return async (url, init) => {
    const method = init?.method ?? "GET";
    for (const route of routes) {
      if (route.method === method && route.path.test(url)) {
        const i = counters.get(route) ?? 0;
        const entry = route.responses[Math.min(i, route.responses.length - 1)];
        counters.set(route, i + 1);
        return new Response(entry.body, {
          status: entry.status ?? 200,
          headers: { "content-type": "application/json" },
        });
      }
    }
    return new Response(JSON.stringify({ error: `no route for ${method} ${url}` }), {
      status: 404,
      headers: { "content-type": "application/json" },
    });
  };
}
