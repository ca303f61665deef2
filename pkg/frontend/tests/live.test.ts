/**
 * Integration checks against a running solver service. Skipped unless
 * TRADEOPT_SERVICE_URL is set, e.g.:
 *
 *   tradeopt serve --port 8000 &
 *   TRADEOPT_SERVICE_URL=http://127.0.0.1:8000 npm run test:live
 */

import { afterEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { initApp, type AppHandle } from '../src/app.js';

const baseUrl = process.env.TRADEOPT_SERVICE_URL;
const describeLive = baseUrl ? describe : describe.skip;

const mountLive = () => {
  const root = document.createElement('div');
  document.body.appendChild(root);
  const handle = initApp(root, new ApiClient(baseUrl!), window.localStorage, { traceN: 61 });
  return { root, handle };
};

const waitForText = async (
  handle: AppHandle,
  read: () => string | null | undefined,
  tries = 50,
): Promise<string> => {
  for (let i = 0; i < tries; i += 1) {
    await handle.flush();
    const value = read();
    if (value) return value;
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error('timed out waiting for render');
};

afterEach(() => document.body.replaceChildren());

describeLive('against the live service', () => {
  it('renders the default one-period optimum at (0.8575, 5.1450)', async () => {
    const { root, handle } = mountLive();
    const label = await waitForText(
      handle,
      () => root.querySelector('[data-role="optimum-label"]')?.textContent,
    );
    expect(label).toBe('(0.8575, 5.1450)');
    expect(
      root.querySelector('[data-role="static-solution"] [data-field="lives"]')?.textContent,
    ).toBe('0.8575');
    expect(
      root.querySelector('[data-role="static-solution"] [data-field="jobs"]')?.textContent,
    ).toBe('5.1450');
    expect(root.querySelector('[data-role="tangent-line"]')).toBeTruthy();
  });

  it('dynamic tab reproduces the two-period reference values at display precision', async () => {
    const { root, handle } = mountLive();
    await waitForText(
      handle,
      () => root.querySelector('[data-role="static-solution"] [data-field="lives"]')?.textContent,
    );
    root.querySelector<HTMLButtonElement>('[data-role="tab"][data-mode="dynamic"]')!.click();

    const read = (field: string) =>
      root.querySelector(`[data-role="dynamic-solution"] [data-field="${field}"]`)?.textContent;
    const lives1 = await waitForText(handle, () => read('lives_1'));

    // reference figures are printed to 4 decimals; agree within one quantum
    const references: Array<[string, number]> = [
      ['lives_1', 1.3903],
      ['lives_2', 2.2352],
      ['jobs_1', 0.0273],
      ['jobs_2', 0.8178],
    ];
    expect(Number(lives1)).toBeCloseTo(1.3903, 3);
    for (const [field, reference] of references) {
      const displayed = Number(read(field));
      expect(Math.abs(displayed - reference)).toBeLessThanOrEqual(1.01e-4);
    }
    expect(read('z')).toContain('3.631');
    expect(Number(read('ratio_1'))).toBeCloseTo(1.7, 6);
    expect(Number(read('ratio_2'))).toBeCloseTo(81.6993, 3);
  });
});
