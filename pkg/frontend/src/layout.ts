/** Layered layout for the confidence DAG.
 *
 * The structure comes from the server's serialized network (nodes arrive
 * parents-first); this module only assigns screen coordinates. Rank is the
 * longest path from any leaf, drawn bottom-up so the root sits on top.
 */

import type { NetworkDoc } from "./types.js";

export interface NodePosition {
  id: string;
  x: number;
  y: number;
  rank: number;
}

export interface LayoutResult {
  positions: Map<string, NodePosition>;
  width: number;
  height: number;
}

export const NODE_WIDTH = 120;
export const NODE_HEIGHT = 44;
const H_GAP = 28;
const V_GAP = 56;
const MARGIN = 24;

export function layoutNetwork(network: NetworkDoc): LayoutResult {
  const rank = new Map<string, number>();
  for (const node of network.nodes) {
    // nodes are topologically ordered, so parents already have ranks
    const parentRanks = node.parents.map((p) => rank.get(p) ?? 0);
    rank.set(node.id, node.parents.length ? Math.max(...parentRanks) + 1 : 0);
  }
  const maxRank = Math.max(0, ...rank.values());

  const rows = new Map<number, string[]>();
  for (const node of network.nodes) {
    const r = rank.get(node.id) ?? 0;
    if (!rows.has(r)) rows.set(r, []);
    rows.get(r)!.push(node.id);
  }

  const widest = Math.max(...[...rows.values()].map((row) => row.length));
  const width = 2 * MARGIN + widest * NODE_WIDTH + (widest - 1) * H_GAP;
  const height = 2 * MARGIN + (maxRank + 1) * NODE_HEIGHT + maxRank * V_GAP;

  const positions = new Map<string, NodePosition>();
  for (const [r, ids] of rows) {
    const rowWidth = ids.length * NODE_WIDTH + (ids.length - 1) * H_GAP;
    const start = (width - rowWidth) / 2;
    ids.forEach((id, i) => {
      positions.set(id, {
        id,
        x: start + i * (NODE_WIDTH + H_GAP),
        y: MARGIN + (maxRank - r) * (NODE_HEIGHT + V_GAP),
        rank: r,
      });
    });
  }
  return { positions, width, height };
}
