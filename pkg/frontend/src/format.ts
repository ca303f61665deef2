/**
 * Display formatting. This is the only arithmetic the client performs on
 * service numbers, and it is limited to rounding for display; totals,
 * optima and even shifted frontier parameters all arrive from the service.
 */

/** Allocations, ratios and multipliers: fixed 4 decimals. */
export const fmt4 = (value: number): string => value.toFixed(4);

/** Benefit totals: 4-decimal mantissa scientific notation. */
export const fmtZ = (value: number): string => value.toExponential(4);

/** Axis / intercept labels: trim trailing zeros down to plain numbers. */
export const fmtAxis = (value: number): string => {
  const fixed = value.toFixed(4);
  return fixed.replace(/\.?0+$/, '') || '0';
};

/** Unit-scale note for axis captions, e.g. "×1e+6". */
export const fmtUnitScale = (unitScale: number): string =>
  unitScale === 1 ? '' : ` (×${unitScale.toExponential(0).replace('e+', 'e')})`;

/** Signed delta between two service-reported values. */
export const fmtDelta = (current: number, baseline: number): string => {
  const delta = current - baseline;
  const sign = delta >= 0 ? '+' : '';
  return `${sign}${delta.toFixed(4)}`;
};

/** Signed delta for benefit totals. */
export const fmtDeltaZ = (current: number, baseline: number): string => {
  const delta = current - baseline;
  const sign = delta >= 0 ? '+' : '';
  return `${sign}${delta.toExponential(4)}`;
};
