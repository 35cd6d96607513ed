// Presentation-only helpers. Rounding to integer percent is the sole
// client-side arithmetic applied to API numbers.

export function pct(fraction: number): number {
  return Math.round(100 * fraction);
}

export function pctLabel(fraction: number): string {
  return `${pct(fraction)}%`;
}

export function yearLabel(granted: number | null, filed: number | null): string {
  if (granted !== null) return `granted ${granted}`;
  if (filed !== null) return `filed ${filed}`;
  return "undated";
}
