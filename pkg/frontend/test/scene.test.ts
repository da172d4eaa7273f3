import { describe, expect, it } from "vitest";

import { mulberry32 } from "../src/layout.js";
import { buildScene, edgeWeight, MAX_RADIUS, MAX_WIDTH, MIN_RADIUS, MIN_WIDTH } from "../src/scene.js";
import type { GraphEdge, GraphPayload, WeightMode } from "../src/types.js";

function generateGraph(rand: () => number, index: number): GraphPayload {
  const nodeCount = 1 + Math.floor(rand() * 9);
  const labels = Array.from({ length: nodeCount }, (_, i) => `place-${index}-${i}`);
  const nodes = labels.map((label) => ({
    label,
    visit_count: 1 + Math.floor(rand() * 40),
  }));
  const edges: GraphEdge[] = [];
  for (const from of labels) {
    for (const to of labels) {
      if (from === to || rand() < 0.55) continue;
      const edge: GraphEdge = {
        from,
        to,
        transition_count: 1 + Math.floor(rand() * 20),
      };
      if (rand() < 0.5) edge.pattern_support = 1 + Math.floor(rand() * 10);
      edges.push(edge);
    }
  }
  return { nodes, edges };
}

describe("size encodings", () => {
  it("bigger visit count means strictly bigger radius", () => {
    const scene = buildScene(
      { nodes: [{ label: "A", visit_count: 2 }, { label: "B", visit_count: 1 }], edges: [] },
      "transitions",
      "u",
    );
    const radius = new Map(scene.nodes.map((n) => [n.label, n.radius]));
    expect(radius.get("A")!).toBeGreaterThan(radius.get("B")!);
  });

  it("heavier edge means strictly wider stroke", () => {
    const scene = buildScene(
      {
        nodes: [{ label: "A", visit_count: 1 }, { label: "B", visit_count: 1 }],
        edges: [
          { from: "A", to: "B", transition_count: 2 },
          { from: "B", to: "A", transition_count: 1 },
        ],
      },
      "transitions",
      "u",
    );
    const width = new Map(scene.edges.map((e) => [`${e.from}>${e.to}`, e.width]));
    expect(width.get("A>B")!).toBeGreaterThan(width.get("B>A")!);
  });

  it("empty graph produces the empty-state scene, no crash", () => {
    const scene = buildScene({ nodes: [], edges: [] }, "transitions", "u");
    expect(scene.empty).toBe(true);
    expect(scene.nodes).toHaveLength(0);
  });

  it("radii and widths are strictly monotone on 20 generated graphs", () => {
    const rand = mulberry32(0x5eed);
    for (let g = 0; g < 20; g++) {
      const graph = generateGraph(rand, g);
      for (const mode of ["transitions", "pattern_support"] as WeightMode[]) {
        const scene = buildScene(graph, mode, `user-${g}`);
        for (const a of scene.nodes) {
          expect(a.radius).toBeGreaterThanOrEqual(MIN_RADIUS);
          expect(a.radius).toBeLessThanOrEqual(MAX_RADIUS);
          for (const b of scene.nodes) {
            if (a.visitCount > b.visitCount) {
              expect(a.radius).toBeGreaterThan(b.radius);
            } else if (a.visitCount === b.visitCount) {
              expect(a.radius).toBe(b.radius);
            }
          }
        }
        for (const a of scene.edges) {
          expect(a.width).toBeGreaterThanOrEqual(MIN_WIDTH);
          expect(a.width).toBeLessThanOrEqual(MAX_WIDTH);
          for (const b of scene.edges) {
            if (a.weight > b.weight) {
              expect(a.width).toBeGreaterThan(b.width);
            } else if (a.weight === b.weight) {
              expect(a.width).toBe(b.width);
            }
          }
        }
      }
    }
  });

  it("pattern_support mode weighs unannotated edges as zero", () => {
    expect(edgeWeight({ transition_count: 5 }, "pattern_support")).toBe(0);
    expect(edgeWeight({ transition_count: 5, pattern_support: 3 }, "pattern_support")).toBe(3);
    expect(edgeWeight({ transition_count: 5, pattern_support: 3 }, "transitions")).toBe(5);
  });

  it("scene is a pure function of payload, mode, and layout key", () => {
    const rand = mulberry32(42);
    const graph = generateGraph(rand, 99);
    const one = buildScene(graph, "transitions", "same-user");
    const two = buildScene(graph, "transitions", "same-user");
    expect(two).toEqual(one);
  });

  it("different layout keys move the nodes", () => {
    const graph: GraphPayload = {
      nodes: [
        { label: "A", visit_count: 3 },
        { label: "B", visit_count: 2 },
        { label: "C", visit_count: 1 },
      ],
      edges: [{ from: "A", to: "B", transition_count: 1 }],
    };
    const one = buildScene(graph, "transitions", "user-one");
    const two = buildScene(graph, "transitions", "user-two");
    const moved = one.nodes.some((n, i) => n.x !== two.nodes[i]!.x || n.y !== two.nodes[i]!.y);
    expect(moved).toBe(true);
  });

  it("marks reciprocal pairs curved and self-transitions as loops", () => {
    const scene = buildScene(
      {
        nodes: [{ label: "A", visit_count: 1 }, { label: "B", visit_count: 1 }],
        edges: [
          { from: "A", to: "B", transition_count: 1 },
          { from: "B", to: "A", transition_count: 1 },
          { from: "A", to: "A", transition_count: 1 },
        ],
      },
      "transitions",
      "u",
    );
    const byKey = new Map(scene.edges.map((e) => [`${e.from}>${e.to}`, e]));
    expect(byKey.get("A>B")!.curved).toBe(true);
    expect(byKey.get("B>A")!.curved).toBe(true);
    expect(byKey.get("A>A")!.loop).toBe(true);
    expect(byKey.get("A>A")!.curved).toBe(false);
  });
});
