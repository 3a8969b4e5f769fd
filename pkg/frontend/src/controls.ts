/** Control panel markup: one slider per leaf confidence, weight, and leak. */

import { fmt3 } from "./format.js";
import type { SliderSpec } from "./state.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const GROUP_TITLES: Record<SliderSpec["kind"], string> = {
  confidence: "Leaf confidences",
  weight: "Inference weights",
  leak: "Leaks",
};

export function renderControls(sliders: SliderSpec[]): string {
  const groups: Record<string, string[]> = { confidence: [], weight: [], leak: [] };
  for (const slider of sliders) {
    const key = escapeHtml(slider.key);
    groups[slider.kind]!.push(
      `<div class="control" data-control="${key}">` +
        `<label for="slider-${key}">${escapeHtml(slider.label)}</label>` +
        `<input type="range" id="slider-${key}" data-key="${key}" ` +
        `min="0" max="1" step="0.001" value="${slider.initial}"/>` +
        `<output data-output="${key}">${fmt3(slider.initial)}</output>` +
        `<div class="control-error" data-error="${key}" hidden></div>` +
        `</div>`,
    );
  }
  const sections: string[] = [];
  for (const kind of ["confidence", "weight", "leak"] as const) {
    if (groups[kind]!.length === 0) continue;
    sections.push(
      `<details open><summary>${GROUP_TITLES[kind]}</summary>${groups[kind]!.join("")}</details>`,
    );
  }
  return sections.join("\n");
}
