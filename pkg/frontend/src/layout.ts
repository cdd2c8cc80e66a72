// Deterministic force-directed layout.  Positions are keyed by the stable
// vertex id, so they survive mutations; user drags overwrite them and the
// overrides persist for the rest of the session.

import type { QuiverData } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<string, Point>;

// small deterministic PRNG so layouts are reproducible run to run
function hashId(id: string): number {
  let h = 2166136261;
  for (let i = 0; i < id.length; i++) {
    h ^= id.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return (h >>> 0) / 4294967296;
}

export function initialLayout(quiver: QuiverData, size = 600): Layout {
  const layout: Layout = new Map();
  const n = quiver.vertices.length;
  quiver.vertices.forEach((v, idx) => {
    const angle = 2 * Math.PI * (idx / n) + hashId(v.id) * 0.3;
    const radius = size * 0.35 * (0.8 + 0.4 * hashId(v.id + "#r"));
    layout.set(v.id, {
      x: size / 2 + radius * Math.cos(angle),
      y: size / 2 + radius * Math.sin(angle),
    });
  });
  return layout;
}

export function relaxLayout(
  quiver: QuiverData,
  layout: Layout,
  pinned: Set<string> = new Set(),
  iterations = 150,
  size = 600,
): Layout {
  const ids = quiver.vertices.map((v) => v.id);
  const pos = new Map<string, Point>();
  for (const id of ids) {
    const p = layout.get(id) ?? { x: size / 2, y: size / 2 };
    pos.set(id, { ...p });
  }
  const edges: Array<[string, string]> = [];
  for (let i = 0; i < ids.length; i++) {
    for (let j = i + 1; j < ids.length; j++) {
      if (quiver.eps2[i][j] !== 0) {
        edges.push([ids[i], ids[j]]);
      }
    }
  }
  const spring = size / 6;
  for (let it = 0; it < iterations; it++) {
    const force = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));
    // pairwise repulsion
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = pos.get(ids[i])!;
        const b = pos.get(ids[j])!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = (spring * spring) / d2;
        const d = Math.sqrt(d2);
        force.get(ids[i])!.x += (dx / d) * f;
        force.get(ids[i])!.y += (dy / d) * f;
        force.get(ids[j])!.x -= (dx / d) * f;
        force.get(ids[j])!.y -= (dy / d) * f;
      }
    }
    // spring attraction along arrows
    for (const [u, v] of edges) {
      const a = pos.get(u)!;
      const b = pos.get(v)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = (d - spring) * 0.05;
      force.get(u)!.x += (dx / d) * f;
      force.get(u)!.y += (dy / d) * f;
      force.get(v)!.x -= (dx / d) * f;
      force.get(v)!.y -= (dy / d) * f;
    }
    const step = 0.85 * (1 - it / iterations) + 0.05;
    for (const id of ids) {
      if (pinned.has(id)) continue;
      const p = pos.get(id)!;
      const f = force.get(id)!;
      p.x = Math.min(size - 20, Math.max(20, p.x + f.x * step));
      p.y = Math.min(size - 20, Math.max(20, p.y + f.y * step));
    }
  }
  return pos;
}
