/**
 * Service base URL resolution, checked in priority order:
 * `?service=` query parameter (also persisted for next time), a previously
 * persisted choice, a `window.TRADEOPT_SERVICE_URL` global injected at build
 * or deploy time, then the local development default.
 */

const STORAGE_KEY = 'tradeopt:service-url';
const DEFAULT_URL = 'http://127.0.0.1:8000';

export const serviceBaseUrl = (win: Window = window): string => {
  const fromQuery = new URLSearchParams(win.location.search).get('service');
  if (fromQuery) {
    try {
      win.localStorage.setItem(STORAGE_KEY, fromQuery);
    } catch {
      // private-mode storage failures are fine; the query param still wins
    }
    return stripSlash(fromQuery);
  }
  try {
    const stored = win.localStorage.getItem(STORAGE_KEY);
    if (stored) return stripSlash(stored);
  } catch {
    // fall through
  }
  const injected = (win as Window & { TRADEOPT_SERVICE_URL?: unknown }).TRADEOPT_SERVICE_URL;
  if (typeof injected === 'string' && injected) return stripSlash(injected);
  return DEFAULT_URL;
};

const stripSlash = (url: string): string => (url.endsWith('/') ? url.slice(0, -1) : url);
