/** Deterministic force-directed layout with support for pinned vertices.
 * Positions carry over between renders so repeated visits to a shape draw
 * identically. */

import type { DiagramPayload } from "./types";

export interface Point {
  x: number;
  y: number;
}

/** Small deterministic PRNG so layouts are reproducible. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations?: number;
  /** vertex -> fixed position (user-dragged pins) */
  pinned?: Map<number, Point>;
  /** starting positions from the previous render */
  initial?: Point[];
  seed?: number;
}

export function forceLayout(diagram: DiagramPayload, opts: LayoutOptions): Point[] {
  const { width, height } = opts;
  const n = diagram.n;
  const iterations = opts.iterations ?? 150;
  const rand = mulberry32(opts.seed ?? 42);
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const pin = opts.pinned?.get(i);
    if (pin) {
      pos.push({ ...pin });
    } else if (opts.initial && opts.initial[i]) {
      pos.push({ ...opts.initial[i] });
    } else {
      pos.push({ x: width * (0.2 + 0.6 * rand()), y: height * (0.2 + 0.6 * rand()) });
    }
  }
  if (n <= 1) {
    return n === 1 && !opts.pinned?.has(0) ? [{ x: width / 2, y: height / 2 }] : pos;
  }

  const adjacent = new Set(diagram.edges.map(([i, j]) => `${Math.min(i, j)}-${Math.max(i, j)}`));
  const ideal = Math.min(width, height) / Math.max(2, Math.sqrt(n) + 1);

  for (let step = 0; step < iterations; step++) {
    const cooling = 1 - step / iterations;
    const disp: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-6) {
          // split coincident points deterministically
          dx = 0.01 * (i - j);
          dy = 0.01;
          dist = Math.hypot(dx, dy);
        }
        const repulse = (ideal * ideal) / dist;
        disp[i].x += (dx / dist) * repulse;
        disp[i].y += (dy / dist) * repulse;
        disp[j].x -= (dx / dist) * repulse;
        disp[j].y -= (dy / dist) * repulse;
        if (adjacent.has(`${i}-${j}`)) {
          const attract = (dist * dist) / ideal;
          disp[i].x -= (dx / dist) * attract;
          disp[i].y -= (dy / dist) * attract;
          disp[j].x += (dx / dist) * attract;
          disp[j].y += (dy / dist) * attract;
        }
      }
    }
    const maxStep = ideal * 0.5 * cooling;
    for (let i = 0; i < n; i++) {
      if (opts.pinned?.has(i)) continue;
      const len = Math.hypot(disp[i].x, disp[i].y);
      if (len < 1e-9) continue;
      const scale = Math.min(len, maxStep) / len;
      pos[i].x += disp[i].x * scale;
      pos[i].y += disp[i].y * scale;
      pos[i].x = Math.min(width - 20, Math.max(20, pos[i].x));
      pos[i].y = Math.min(height - 20, Math.max(20, pos[i].y));
    }
  }
  return pos;
}
