// Small deterministic force layout. No physics library: the graphs here
// are a few dozen nodes, and the layout must be a pure function of
// (labels, edges, seed) so rendered scenes can be snapshot-tested.

export interface Point {
  x: number;
  y: number;
}

export function seedFromString(text: string): number {
  // FNV-1a, 32 bit
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193);
  }
  return hash >>> 0;
}

export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 250;
const PADDING = 40;

export function computeLayout(
  labels: string[],
  edges: Array<{ from: string; to: string }>,
  width: number,
  height: number,
  seed: number,
): Map<string, Point> {
  const positions = new Map<string, Point>();
  if (labels.length === 0) return positions;

  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 2 - PADDING;

  // start on a circle (stable ordering) with seeded jitter
  const points = labels.map((_, i) => {
    const angle = (2 * Math.PI * i) / labels.length;
    return {
      x: cx + radius * 0.6 * Math.cos(angle) + (rand() - 0.5) * 30,
      y: cy + radius * 0.6 * Math.sin(angle) + (rand() - 0.5) * 30,
    };
  });
  const index = new Map(labels.map((label, i) => [label, i]));
  const springs: Array<[number, number]> = [];
  for (const edge of edges) {
    const a = index.get(edge.from);
    const b = index.get(edge.to);
    if (a === undefined || b === undefined || a === b) continue;
    springs.push([a, b]);
  }

  const restLength = Math.max(70, radius / Math.sqrt(labels.length));
  for (let step = 0; step < ITERATIONS; step++) {
    const cool = 1 - step / ITERATIONS;
    const moves = points.map(() => ({ x: 0, y: 0 }));

    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const pi = points[i]!;
        const pj = points[j]!;
        let dx = pi.x - pj.x;
        let dy = pi.y - pj.y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-4) {
          // coincident points: deterministic nudge
          dx = 0.01 * (i - j);
          dy = 0.01;
          d2 = dx * dx + dy * dy;
        }
        const push = (restLength * restLength) / d2;
        moves[i]!.x += dx * push * 0.02;
        moves[i]!.y += dy * push * 0.02;
        moves[j]!.x -= dx * push * 0.02;
        moves[j]!.y -= dy * push * 0.02;
      }
    }
    for (const [a, b] of springs) {
      const pa = points[a]!;
      const pb = points[b]!;
      const dx = pb.x - pa.x;
      const dy = pb.y - pa.y;
      const dist = Math.sqrt(dx * dx + dy * dy) || 1;
      const pull = ((dist - restLength) / dist) * 0.01;
      moves[a]!.x += dx * pull;
      moves[a]!.y += dy * pull;
      moves[b]!.x -= dx * pull;
      moves[b]!.y -= dy * pull;
    }
    for (let i = 0; i < points.length; i++) {
      const p = points[i]!;
      const m = moves[i]!;
      p.x += (m.x + (cx - p.x) * 0.002) * cool * 8;
      p.y += (m.y + (cy - p.y) * 0.002) * cool * 8;
      p.x = Math.min(width - PADDING, Math.max(PADDING, p.x));
      p.y = Math.min(height - PADDING, Math.max(PADDING, p.y));
    }
  }

  labels.forEach((label, i) => {
    const p = points[i]!;
    positions.set(label, { x: Math.round(p.x * 100) / 100, y: Math.round(p.y * 100) / 100 });
  });
  return positions;
}
