/** Network panel: SVG rendered from the layout plus the latest values. */

import { confidenceColor } from "./color.js";
import { diffBadge, fmt3 } from "./format.js";
import { layoutNetwork, NODE_HEIGHT, NODE_WIDTH } from "./layout.js";
import type { NetworkDoc } from "./types.js";

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const SHAPE_RADIUS: Record<string, number> = { leaf: 22, derived: 4, intermediate: 12 };

export function renderGraphSvg(
  network: NetworkDoc,
  values: Record<string, number>,
  baseline: Record<string, number>,
  colorblindSafe: boolean,
): string {
  const { positions, width, height } = layoutNetwork(network);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}" font-size="12" font-family="system-ui, sans-serif">`,
  ];
  for (const node of network.nodes) {
    const to = positions.get(node.id)!;
    for (const parent of node.parents) {
      const from = positions.get(parent)!;
      parts.push(
        `<line x1="${from.x + NODE_WIDTH / 2}" y1="${from.y}" ` +
          `x2="${to.x + NODE_WIDTH / 2}" y2="${to.y + NODE_HEIGHT}" ` +
          `stroke="#9aa0a6" stroke-width="1.5"/>`,
      );
    }
  }
  for (const node of network.nodes) {
    const pos = positions.get(node.id)!;
    const g = values[node.id];
    const fill = g === undefined ? "#e0e0e0" : confidenceColor(g, colorblindSafe);
    const radius = SHAPE_RADIUS[node.origin] ?? 4;
    const label = g === undefined ? node.id : `${node.id}  ${fmt3(g)}`;
    const badge = g === undefined ? "" : diffBadge(baseline[node.id] ?? g, g);
    parts.push(
      `<g data-node="${escapeXml(node.id)}">` +
        `<rect x="${pos.x}" y="${pos.y}" width="${NODE_WIDTH}" height="${NODE_HEIGHT}" ` +
        `rx="${radius}" fill="${fill}" stroke="#333"/>` +
        `<text x="${pos.x + NODE_WIDTH / 2}" y="${pos.y + (badge ? 19 : 27)}" ` +
        `text-anchor="middle" fill="#fff" font-weight="600">${escapeXml(label)}</text>` +
        (badge
          ? `<text class="badge" x="${pos.x + NODE_WIDTH / 2}" y="${pos.y + 36}" ` +
            `text-anchor="middle" fill="#fff">${escapeXml(badge)}</text>`
          : "") +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
