/** Pure SVG rendering of a diagram: directed labeled edges, clickable
 * vertices, optional highlight of the last-mutated vertex. Returning a
 * string keeps rendering testable without a DOM. */

import type { Point } from "./layout";
import type { DiagramPayload } from "./types";

export interface RenderOptions {
  width: number;
  height: number;
  highlight?: number;
}

const VERTEX_RADIUS = 16;

function fmt(x: number): string {
  return x.toFixed(1);
}

export function renderDiagram(
  diagram: DiagramPayload,
  positions: Point[],
  opts: RenderOptions,
): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${opts.width} ${opts.height}" class="diagram">`,
  );
  parts.push(
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>`,
  );
  const edges = [...diagram.edges].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  for (const [from, to, weight] of edges) {
    const a = positions[from];
    const b = positions[to];
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.hypot(dx, dy) || 1;
    // trim the segment so the arrowhead meets the vertex circle
    const x1 = a.x + (dx / dist) * VERTEX_RADIUS;
    const y1 = a.y + (dy / dist) * VERTEX_RADIUS;
    const x2 = b.x - (dx / dist) * (VERTEX_RADIUS + 4);
    const y2 = b.y - (dy / dist) * (VERTEX_RADIUS + 4);
    parts.push(
      `<line class="edge" data-edge="${from}-${to}" x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" marker-end="url(#arrow)"/>`,
    );
    const mx = (a.x + b.x) / 2 - (dy / dist) * 10;
    const my = (a.y + b.y) / 2 + (dx / dist) * 10;
    parts.push(
      `<text class="edge-label" x="${fmt(mx)}" y="${fmt(my)}" text-anchor="middle">${weight}</text>`,
    );
  }
  for (let i = 0; i < diagram.n; i++) {
    const p = positions[i];
    const cls = i === opts.highlight ? "vertex highlight" : "vertex";
    parts.push(
      `<g class="${cls}" data-vertex="${i}">` +
        `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="${VERTEX_RADIUS}"/>` +
        `<text x="${fmt(p.x)}" y="${fmt(p.y + 5)}" text-anchor="middle">${i + 1}</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
