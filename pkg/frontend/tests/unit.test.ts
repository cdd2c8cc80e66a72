import { describe, expect, it } from "vitest";

import type { QuiverData, SessionState } from "../src/api.js";
import { initialLayout, relaxLayout } from "../src/layout.js";
import { prettyScalar, sceneFromQuiver, sceneToSvg } from "../src/render.js";
import { pinRenderText } from "../src/state.js";

const figure1: QuiverData = {
  vertices: [
    { id: "a", frozen: false, label: "" },
    { id: "b", frozen: false, label: "" },
    { id: "c", frozen: true, label: "" },
    { id: "d", frozen: true, label: "" },
  ],
  eps2: [
    [0, -2, 0, 0],
    [2, 0, -2, 2],
    [0, 2, 0, -1],
    [0, -2, 1, 0],
  ],
};

describe("layout", () => {
  it("is deterministic and keyed by vertex id", () => {
    const a = relaxLayout(figure1, initialLayout(figure1));
    const b = relaxLayout(figure1, initialLayout(figure1));
    expect([...a.entries()]).toEqual([...b.entries()]);
  });

  it("keeps dragged vertices fixed", () => {
    const base = initialLayout(figure1);
    base.set("a", { x: 123, y: 321 });
    const out = relaxLayout(figure1, base, new Set(["a"]));
    expect(out.get("a")).toEqual({ x: 123, y: 321 });
  });
});

describe("scene", () => {
  it("renders arrows by positive eps with dashed half-arrows", () => {
    const scene = sceneFromQuiver(figure1, initialLayout(figure1));
    const edges = new Map(scene.edges.map((e) => [`${e.from}->${e.to}`, e]));
    expect(edges.get("b->a")!.multiplicity).toBe(1);
    expect(edges.get("b->a")!.dashed).toBe(false);
    expect(edges.get("d->c")!.dashed).toBe(true); // eps = 1/2
    expect(edges.has("a->b")).toBe(false);
    const svg = sceneToSvg(scene);
    expect(svg).toContain('data-vertex="c" data-frozen="true"');
    expect(svg).toContain("stroke-dasharray");
  });

  it("draws multiplicity-many arrows", () => {
    const doubled: QuiverData = {
      vertices: [
        { id: "x", frozen: false, label: "" },
        { id: "y", frozen: false, label: "" },
      ],
      eps2: [
        [0, 4],
        [-4, 0],
      ],
    };
    const scene = sceneFromQuiver(doubled, initialLayout(doubled));
    expect(scene.edges[0].multiplicity).toBe(2);
    const svg = sceneToSvg(scene);
    expect(svg.match(/data-edge="x->y"/g)!.length).toBe(2);
  });
});

describe("pin rendering", () => {
  it("shows server text verbatim and flags NotLaurent", () => {
    expect(
      pinRenderText({ kind: "element", status: "ok", text: "X[a] + X[b]" }),
    ).toBe("X[a] + X[b]");
    expect(pinRenderText({ kind: "element", status: "NotLaurent" })).toBe(
      "not Laurent in this chart",
    );
  });

  it("prettifies q powers without touching the payload", () => {
    expect(prettyScalar("q^2 + q^(-1/2)")).toBe("q² + q⁽⁻¹ᐟ²⁾");
    expect(prettyScalar("3")).toBe("3");
  });
});
