/**
 * SVG frontier view: the traced polyline, both intercepts, the optimum
 * marker, and the benefit level line through the optimum (tangent to the
 * frontier). Pure rendering: every coordinate and label comes from service
 * responses; this module only maps data space to pixels.
 */

import { fmtAxis, fmtUnitScale } from './format.js';
import type { AllocationPoint, TraceResponse } from './types.js';

export type ChartInput = {
  trace: TraceResponse;
  optimum: AllocationPoint | null;
  tangent: AllocationPoint[];
  unitScale: number;
};

const SVG_NS = 'http://www.w3.org/2000/svg';
const WIDTH = 560;
const HEIGHT = 420;
const MARGIN = { left: 64, right: 16, top: 16, bottom: 56 };

type Scale = (value: number) => number;

const el = (doc: Document, tag: string, attrs: Record<string, string>): Element => {
  const node = doc.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
};

/** Liang-Barsky clip of a segment to the box [0,xMax] x [0,yMax]. */
export const clipSegment = (
  ends: AllocationPoint[],
  xMax: number,
  yMax: number,
): AllocationPoint[] => {
  if (ends.length !== 2) return ends;
  const [start, end] = ends;
  const dx = end.lives_saved - start.lives_saved;
  const dy = end.jobs_saved - start.jobs_saved;
  let t0 = 0;
  let t1 = 1;
  const edges: Array<[number, number]> = [
    [-dx, start.lives_saved],        // lives >= 0
    [dx, xMax - start.lives_saved],  // lives <= xMax
    [-dy, start.jobs_saved],         // jobs >= 0
    [dy, yMax - start.jobs_saved],   // jobs <= yMax
  ];
  for (const [p, q] of edges) {
    if (p === 0) {
      if (q < 0) return [];
      continue;
    }
    const t = q / p;
    if (p < 0) {
      if (t > t1) return [];
      if (t > t0) t0 = t;
    } else {
      if (t < t0) return [];
      if (t < t1) t1 = t;
    }
  }
  const at = (t: number): AllocationPoint =>
    t === 0
      ? start
      : t === 1
        ? end
        : { lives_saved: start.lives_saved + t * dx, jobs_saved: start.jobs_saved + t * dy };
  return [at(t0), at(t1)];
};

export const renderFrontierChart = (doc: Document, input: ChartInput): SVGSVGElement => {
  const { trace, optimum, tangent, unitScale } = input;
  const xDataMax = trace.intercepts.lives * 1.12;
  const yDataMax = trace.intercepts.jobs * 1.12;
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const x: Scale = (v) => MARGIN.left + (v / xDataMax) * plotW;
  const y: Scale = (v) => MARGIN.top + plotH - (v / yDataMax) * plotH;

  const svg = el(doc, 'svg', {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
    'data-role': 'frontier-chart',
  }) as SVGSVGElement;

  // axes
  svg.appendChild(
    el(doc, 'line', {
      x1: String(x(0)), y1: String(y(0)), x2: String(x(xDataMax)), y2: String(y(0)),
      stroke: '#444', 'stroke-width': '1',
    }),
  );
  svg.appendChild(
    el(doc, 'line', {
      x1: String(x(0)), y1: String(y(0)), x2: String(x(0)), y2: String(y(yDataMax)),
      stroke: '#444', 'stroke-width': '1',
    }),
  );

  // frontier polyline
  const pathPoints = trace.points
    .map((p) => `${x(p.lives_saved).toFixed(2)},${y(p.jobs_saved).toFixed(2)}`)
    .join(' ');
  svg.appendChild(
    el(doc, 'polyline', {
      points: pathPoints,
      fill: 'none',
      stroke: '#1668aa',
      'stroke-width': '2',
      'data-role': 'frontier-trace',
    }),
  );

  // benefit level line through the optimum, clipped to the viewport
  const clipped = clipSegment(tangent, xDataMax, yDataMax);
  if (clipped.length === 2) {
    svg.appendChild(
      el(doc, 'line', {
        x1: String(x(clipped[0].lives_saved)),
        y1: String(y(clipped[0].jobs_saved)),
        x2: String(x(clipped[1].lives_saved)),
        y2: String(y(clipped[1].jobs_saved)),
        stroke: '#b2551f',
        'stroke-width': '1.5',
        'stroke-dasharray': '6 4',
        'data-role': 'tangent-line',
      }),
    );
  }

  // intercept markers with value labels straight off the trace response
  for (const [role, lives, jobs, label, dx, dy, anchor] of [
    ['lives-intercept', trace.intercepts.lives, 0, fmtAxis(trace.intercepts.lives), 0, 18, 'middle'],
    ['jobs-intercept', 0, trace.intercepts.jobs, fmtAxis(trace.intercepts.jobs), -8, 4, 'end'],
  ] as const) {
    svg.appendChild(
      el(doc, 'circle', {
        cx: String(x(lives)), cy: String(y(jobs)), r: '3.5',
        fill: '#1668aa', 'data-role': role,
      }),
    );
    const text = el(doc, 'text', {
      x: String(x(lives) + dx), y: String(y(jobs) + dy),
      'font-size': '12', 'text-anchor': anchor, 'data-role': `${role}-label`,
    });
    text.textContent = label;
    svg.appendChild(text);
  }

  // the optimum
  if (optimum) {
    svg.appendChild(
      el(doc, 'circle', {
        cx: String(x(optimum.lives_saved)),
        cy: String(y(optimum.jobs_saved)),
        r: '5',
        fill: '#c22a2a',
        'data-role': 'optimum-marker',
      }),
    );
    const label = el(doc, 'text', {
      x: String(x(optimum.lives_saved) + 9),
      y: String(y(optimum.jobs_saved) - 9),
      'font-size': '12',
      'data-role': 'optimum-label',
    });
    label.textContent = `(${optimum.lives_saved.toFixed(4)}, ${optimum.jobs_saved.toFixed(4)})`;
    svg.appendChild(label);
  }

  // axis captions carry the unit scale
  const xCaption = el(doc, 'text', {
    x: String(MARGIN.left + plotW / 2),
    y: String(HEIGHT - 12),
    'font-size': '13',
    'text-anchor': 'middle',
    'data-role': 'x-axis-label',
  });
  xCaption.textContent = `lives saved${fmtUnitScale(unitScale)}`;
  svg.appendChild(xCaption);

  const yCaption = el(doc, 'text', {
    x: '18',
    y: String(MARGIN.top + plotH / 2),
    'font-size': '13',
    'text-anchor': 'middle',
    transform: `rotate(-90 18 ${MARGIN.top + plotH / 2})`,
    'data-role': 'y-axis-label',
  });
  yCaption.textContent = `jobs saved${fmtUnitScale(unitScale)}`;
  svg.appendChild(yCaption);

  return svg;
};
