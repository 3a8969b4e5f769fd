/** Tornado panel: horizontal ordered-interval chart.
 *
 * Bars appear in the exact order the service ranked them; clicking a bar
 * focuses the matching slider (wired through data-key attributes).
 */

import { fmt3 } from "./format.js";
import type { TornadoDoc } from "./types.js";

export interface TornadoBar {
  key: string;
  label: string;
  lo: number;
  hi: number;
  width: number;
  row: number;
}

export const CHART_WIDTH = 360;
export const LABEL_WIDTH = 150;
export const ROW_HEIGHT = 26;

/** Pure view model: one bar per entry, in entry order. */
export function tornadoBars(doc: TornadoDoc): TornadoBar[] {
  return doc.entries.map((entry, row) => ({
    key: entry.variable.key,
    label: entry.variable.label,
    lo: Math.min(entry.at_min, entry.at_max),
    hi: Math.max(entry.at_min, entry.at_max),
    width: entry.width,
    row,
  }));
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderTornadoSvg(doc: TornadoDoc): string {
  const bars = tornadoBars(doc);
  const height = (bars.length + 1) * ROW_HEIGHT + 16;
  const total = LABEL_WIDTH + CHART_WIDTH + 20;
  const x0 = (g: number) => LABEL_WIDTH + g * CHART_WIDTH;
  const baselineX = x0(doc.baseline);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${total} ${height}" ` +
      `width="${total}" height="${height}" font-size="12" font-family="system-ui, sans-serif">`,
    `<text x="4" y="16">target ${escapeXml(doc.target)}, baseline ${fmt3(doc.baseline)}</text>`,
    `<line x1="${baselineX.toFixed(1)}" y1="${ROW_HEIGHT}" x2="${baselineX.toFixed(1)}" ` +
      `y2="${height - 8}" stroke="#888" stroke-dasharray="4 2"/>`,
  ];
  for (const bar of bars) {
    const y = (bar.row + 1) * ROW_HEIGHT + 8;
    parts.push(
      `<g class="tornado-bar" data-key="${escapeXml(bar.key)}">` +
        `<text x="4" y="${y + 13}">${escapeXml(bar.label)}</text>` +
        `<rect x="${x0(bar.lo).toFixed(1)}" y="${y}" ` +
        `width="${Math.max((bar.hi - bar.lo) * CHART_WIDTH, 1).toFixed(1)}" height="${ROW_HEIGHT - 8}" ` +
        `fill="#4477aa"><title>${escapeXml(`${bar.label}: ${fmt3(bar.lo)} .. ${fmt3(bar.hi)}`)}</title></rect>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
