// Quiver rendering: frozen vertices as boxes, mutable as circles, arrow
// multiplicity [eps]_+ many parallel arrows, dashed stroke for non-integer
// eps (half-arrows between frozen vertices).

import type { QuiverData } from "./api.js";
import type { Layout } from "./layout.js";

export interface EdgeView {
  from: string;
  to: string;
  eps2: number;
  multiplicity: number;
  dashed: boolean;
}

export interface NodeView {
  id: string;
  frozen: boolean;
  label: string;
  x: number;
  y: number;
}

export interface Scene {
  nodes: NodeView[];
  edges: EdgeView[];
}

export function sceneFromQuiver(quiver: QuiverData, layout: Layout): Scene {
  const nodes: NodeView[] = quiver.vertices.map((v) => {
    const p = layout.get(v.id) ?? { x: 0, y: 0 };
    return { id: v.id, frozen: v.frozen, label: v.label, x: p.x, y: p.y };
  });
  const edges: EdgeView[] = [];
  const ids = quiver.vertices.map((v) => v.id);
  for (let i = 0; i < ids.length; i++) {
    for (let j = 0; j < ids.length; j++) {
      const e2 = quiver.eps2[i][j];
      if (e2 <= 0) continue; // arrows follow positive eps entries only
      edges.push({
        from: ids[i],
        to: ids[j],
        eps2: e2,
        multiplicity: Math.floor(e2 / 2) || 1,
        dashed: e2 % 2 !== 0,
      });
    }
  }
  return { nodes, edges };
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function sceneToSvg(scene: Scene, size = 600): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${size}" height="${size}" viewBox="0 0 ${size} ${size}">`,
  );
  parts.push(
    `<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="3" orient="auto">` +
      `<path d="M0,0 L7,3 L0,6 z"/></marker></defs>`,
  );
  const byId = new Map(scene.nodes.map((n) => [n.id, n]));
  for (const e of scene.edges) {
    const a = byId.get(e.from)!;
    const b = byId.get(e.to)!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const nx = -dy / len;
    const ny = dx / len;
    for (let m = 0; m < e.multiplicity; m++) {
      const off = (m - (e.multiplicity - 1) / 2) * 6;
      const x1 = a.x + nx * off + (dx / len) * 14;
      const y1 = a.y + ny * off + (dy / len) * 14;
      const x2 = b.x + nx * off - (dx / len) * 14;
      const y2 = b.y + ny * off - (dy / len) * 14;
      const dash = e.dashed ? ` stroke-dasharray="6 4"` : "";
      parts.push(
        `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" ` +
          `y2="${y2.toFixed(1)}" stroke="black"${dash} marker-end="url(#arrow)" ` +
          `data-edge="${esc(e.from)}->${esc(e.to)}"/>`,
      );
    }
  }
  for (const n of scene.nodes) {
    const shape = n.frozen
      ? `<rect x="${(n.x - 10).toFixed(1)}" y="${(n.y - 10).toFixed(1)}" width="20" height="20" ` +
        `fill="white" stroke="black" data-vertex="${esc(n.id)}" data-frozen="true"/>`
      : `<circle cx="${n.x.toFixed(1)}" cy="${n.y.toFixed(1)}" r="11" fill="white" ` +
        `stroke="black" data-vertex="${esc(n.id)}" data-frozen="false"/>`;
    parts.push(shape);
    parts.push(
      `<text x="${n.x.toFixed(1)}" y="${(n.y + 26).toFixed(1)}" font-size="10" ` +
        `text-anchor="middle">${esc(n.id)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Unicode q-power prettification of the server's exact scalar text.
 *  Presentation only: the raw string stays available via the JSON toggle. */
export function prettyScalar(text: string): string {
  const sup: Record<string, string> = {
    "0": "⁰", "1": "¹", "2": "²", "3": "³", "4": "⁴",
    "5": "⁵", "6": "⁶", "7": "⁷", "8": "⁸", "9": "⁹",
    "-": "⁻", "(": "⁽", ")": "⁾", "/": "ᐟ",
  };
  return text.replace(/q\^(\(-?\d+\/2\)|-?\d+)/g, (_, exp: string) => {
    return "q" + [...exp].map((ch) => sup[ch] ?? ch).join("");
  });
}
