import { describe, expect, it } from 'vitest';

import { ApiClient, ServiceFieldError, ServiceUnreachableError } from '../src/api.js';
import { serviceBaseUrl } from '../src/config.js';

import solveStatic from './fixtures/solve_static.json' with { type: 'json' };
import error422 from './fixtures/error_422.json' with { type: 'json' };

const jsonResponse = (body: unknown, status = 200) =>
  new Response(JSON.stringify(body), {
    status,
    headers: { 'content-type': 'application/json' },
  });

describe('ApiClient', () => {
  it('posts the body and returns the parsed document', async () => {
    let seen: { url: string; body: string } | null = null;
    const client = new ApiClient('http://svc.test', async (url, init) => {
      seen = { url, body: init?.body as string };
      return jsonResponse(solveStatic);
    });
    const response = await client.solveStatic({
      frontier: { a: 10, b: 0.1, c: 10 },
      valuation: { p_life: 1e6, p_job: 6e4 },
    });
    expect(seen!.url).toBe('http://svc.test/v1/solve/static');
    expect(JSON.parse(seen!.body).frontier.a).toBe(10);
    expect(response.solution.allocation.lives_saved).toBe(
      solveStatic.solution.allocation.lives_saved,
    );
  });

  it('maps 4xx error bodies to ServiceFieldError with code and path', async () => {
    const client = new ApiClient('http://svc.test', async () => jsonResponse(error422, 422));
    const failure = await client
      .solveStatic({
        frontier: { a: 10, b: 0.1, c: 10 },
        valuation: { p_life: -5, p_job: 6e4 },
      })
      .catch((err) => err);
    expect(failure).toBeInstanceOf(ServiceFieldError);
    expect(failure.code).toBe('NEGATIVE_PARAMETER');
    expect(failure.path).toBe('valuation.p_life');
    expect(failure.status).toBe(422);
  });

  it('wraps network failures as ServiceUnreachableError', async () => {
    const client = new ApiClient('http://svc.test', async () => {
      throw new TypeError('fetch failed');
    });
    await expect(client.trace({ a: 1, b: 1, c: 1 }, 10)).rejects.toBeInstanceOf(
      ServiceUnreachableError,
    );
  });
});

describe('serviceBaseUrl', () => {
  const fakeWindow = (search: string, injected?: string): Window => {
    const store = new Map<string, string>();
    return {
      location: { search } as Location,
      localStorage: {
        getItem: (k: string) => store.get(k) ?? null,
        setItem: (k: string, v: string) => void store.set(k, v),
      } as Storage,
      TRADEOPT_SERVICE_URL: injected,
    } as unknown as Window;
  };

  it('prefers the ?service= query parameter and persists it', () => {
    const win = fakeWindow('?service=http://other:9000/');
    expect(serviceBaseUrl(win)).toBe('http://other:9000');
    expect(win.localStorage.getItem('tradeopt:service-url')).toBe('http://other:9000/');
  });

  it('falls back to an injected global, then the default', () => {
    expect(serviceBaseUrl(fakeWindow('', 'http://built-in:1234'))).toBe('http://built-in:1234');
    expect(serviceBaseUrl(fakeWindow(''))).toBe('http://127.0.0.1:8000');
  });
});
