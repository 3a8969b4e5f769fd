/** Number formatting shared across panels. */

/** Confidence label: three decimals, e.g. 0.857. */
export function fmt3(value: number): string {
  return value.toFixed(3);
}

/** Baseline/current diff badge text; empty string when they agree. */
export function diffBadge(baseline: number, current: number): string {
  if (Math.abs(baseline - current) <= 1e-12) return "";
  return `${fmt3(baseline)} → ${fmt3(current)}`;
}
