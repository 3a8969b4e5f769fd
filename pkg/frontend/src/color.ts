/** Confidence color ramps: 0 maps to the "low" end, 1 to the "high" end. */

type Rgb = [number, number, number];

// default: red (0) to green (1)
const DEFAULT_LOW: Rgb = [211, 47, 47];
const DEFAULT_HIGH: Rgb = [46, 125, 50];

// colorblind-safe alternative: orange (0) to purple (1), PuOr-style
const SAFE_LOW: Rgb = [179, 88, 6];
const SAFE_HIGH: Rgb = [84, 39, 136];

function interpolate(low: Rgb, high: Rgb, t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const channel = (i: number) => Math.round(low[i]! + (high[i]! - low[i]!) * clamped);
  return `rgb(${channel(0)}, ${channel(1)}, ${channel(2)})`;
}

export function confidenceColor(g: number, colorblindSafe = false): string {
  return colorblindSafe
    ? interpolate(SAFE_LOW, SAFE_HIGH, g)
    : interpolate(DEFAULT_LOW, DEFAULT_HIGH, g);
}
