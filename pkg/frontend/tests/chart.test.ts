import { describe, expect, it } from 'vitest';

import { clipSegment, renderFrontierChart } from '../src/chart.js';
import type { TraceResponse } from '../src/types.js';

import traceFixture from './fixtures/trace.json' with { type: 'json' };
import staticFixture from './fixtures/solve_static.json' with { type: 'json' };

const trace = traceFixture as TraceResponse;

describe('clipSegment', () => {
  it('keeps interior segments intact', () => {
    const ends = [
      { lives_saved: 0.2, jobs_saved: 0.2 },
      { lives_saved: 0.8, jobs_saved: 0.6 },
    ];
    expect(clipSegment(ends, 1, 1)).toEqual(ends);
  });

  it('clips a crossing segment to the box', () => {
    const [p, q] = clipSegment(
      [
        { lives_saved: 2, jobs_saved: 0 },
        { lives_saved: 0, jobs_saved: 2 },
      ],
      1,
      2,
    );
    expect(p.lives_saved).toBeCloseTo(1, 12);
    expect(p.jobs_saved).toBeCloseTo(1, 12);
    expect(q.lives_saved).toBeCloseTo(0, 12);
    expect(q.jobs_saved).toBeCloseTo(2, 12);
  });

  it('drops segments entirely outside', () => {
    expect(
      clipSegment(
        [
          { lives_saved: 5, jobs_saved: 5 },
          { lives_saved: 6, jobs_saved: 9 },
        ],
        1,
        1,
      ),
    ).toEqual([]);
  });
});

describe('renderFrontierChart', () => {
  const input = {
    trace,
    optimum: staticFixture.solution.allocation,
    tangent: staticFixture.tangent,
    unitScale: 1e6,
  };

  it('draws the polyline, both intercepts, the optimum and the tangent', () => {
    const svg = renderFrontierChart(document, input);
    expect(svg.querySelector('[data-role="frontier-trace"]')).toBeTruthy();
    expect(svg.querySelector('[data-role="lives-intercept"]')).toBeTruthy();
    expect(svg.querySelector('[data-role="jobs-intercept"]')).toBeTruthy();
    expect(svg.querySelector('[data-role="optimum-marker"]')).toBeTruthy();
    expect(svg.querySelector('[data-role="tangent-line"]')).toBeTruthy();
  });

  it('labels the optimum with the service values at display precision', () => {
    const svg = renderFrontierChart(document, input);
    expect(svg.querySelector('[data-role="optimum-label"]')?.textContent).toBe(
      '(0.8575, 5.1450)',
    );
  });

  it('labels the axes with the unit scale and the intercept values', () => {
    const svg = renderFrontierChart(document, input);
    expect(svg.querySelector('[data-role="x-axis-label"]')?.textContent).toBe(
      'lives saved (×1e6)',
    );
    expect(svg.querySelector('[data-role="lives-intercept-label"]')?.textContent).toBe('1');
    expect(svg.querySelector('[data-role="jobs-intercept-label"]')?.textContent).toBe('10');
  });

  it('omits the tangent when no segment is supplied', () => {
    const svg = renderFrontierChart(document, { ...input, tangent: [] });
    expect(svg.querySelector('[data-role="tangent-line"]')).toBeNull();
  });

  it('has the polyline span the whole quarter-frontier', () => {
    const svg = renderFrontierChart(document, input);
    const points = svg
      .querySelector('[data-role="frontier-trace"]')!
      .getAttribute('points')!
      .split(' ');
    expect(points).toHaveLength(trace.points.length);
  });
});
