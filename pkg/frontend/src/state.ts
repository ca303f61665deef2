/**
 * Explorer state: current parameters for both tabs, the pinned baseline,
 * the last solution (tagged with the edit version that produced it), and
 * named saved scenarios persisted in localStorage.
 */

import type { DynamicResponse, StaticResponse } from './types.js';

export type Mode = 'static' | 'dynamic' | 'chain';

export type StaticParams = {
  a: number;
  b: number;
  c: number;
  p_life: number;
  p_job: number;
};

export type DynamicParams = {
  a1: number;
  b1: number;
  c1: number;
  a2: number;
  b2: number;
  c2: number;
  p_life_1: number;
  p_job_1: number;
  p_life_2: number;
  p_job_2: number;
  discount_rate: number;
};

export type SavedScenario = {
  name: string;
  mode: Mode;
  staticParams: StaticParams;
  dynamicParams: DynamicParams;
  unitScale: number;
  savedAt: string;
};

export type PinnedBaseline = {
  params: StaticParams;
  response: StaticResponse;
};

export type ExplorerState = {
  mode: Mode;
  staticParams: StaticParams;
  dynamicParams: DynamicParams;
  unitScale: number;
  /** bumped on every parameter edit; responses carry the version of the
   * request that produced them so stale renders can be rejected */
  version: number;
  lastStatic: { version: number; response: StaticResponse } | null;
  lastDynamic: { version: number; response: DynamicResponse } | null;
  baseline: PinnedBaseline | null;
};

const SAVED_KEY = 'tradeopt:saved-scenarios';

export const defaultStaticParams = (): StaticParams => ({
  a: 10,
  b: 0.1,
  c: 10,
  p_life: 1_000_000,
  p_job: 60_000,
});

export const defaultDynamicParams = (): DynamicParams => ({
  a1: 0.2,
  b1: 1,
  c1: 1,
  a2: 1,
  b2: 0.1,
  c2: 2,
  p_life_1: 1_000_000,
  p_job_1: 60_000,
  p_life_2: 1_000_000,
  p_job_2: 60_000,
  discount_rate: 0.02,
});

export const initialState = (): ExplorerState => ({
  mode: 'static',
  staticParams: defaultStaticParams(),
  dynamicParams: defaultDynamicParams(),
  unitScale: 1e6,
  version: 0,
  lastStatic: null,
  lastDynamic: null,
  baseline: null,
});

export const loadSavedScenarios = (storage: Storage): SavedScenario[] => {
  try {
    const raw = storage.getItem(SAVED_KEY);
    if (!raw) return [];
    const parsed = JSON.parse(raw);
    return Array.isArray(parsed) ? (parsed as SavedScenario[]) : [];
  } catch {
    return [];
  }
};

export const persistSavedScenarios = (storage: Storage, scenarios: SavedScenario[]): void => {
  try {
    storage.setItem(SAVED_KEY, JSON.stringify(scenarios));
  } catch {
    // storage may be unavailable (private mode); saving is best-effort
  }
};

export const saveScenario = (
  storage: Storage,
  state: ExplorerState,
  name: string,
): SavedScenario[] => {
  const entry: SavedScenario = {
    name,
    mode: state.mode,
    staticParams: { ...state.staticParams },
    dynamicParams: { ...state.dynamicParams },
    unitScale: state.unitScale,
    savedAt: new Date().toISOString(),
  };
  const next = loadSavedScenarios(storage).filter((s) => s.name !== name);
  next.push(entry);
  persistSavedScenarios(storage, next);
  return next;
};

export const deleteScenario = (storage: Storage, name: string): SavedScenario[] => {
  const next = loadSavedScenarios(storage).filter((s) => s.name !== name);
  persistSavedScenarios(storage, next);
  return next;
};

export const applySavedScenario = (state: ExplorerState, saved: SavedScenario): ExplorerState => ({
  ...state,
  mode: saved.mode,
  staticParams: { ...saved.staticParams },
  dynamicParams: { ...saved.dynamicParams },
  unitScale: saved.unitScale,
  version: state.version + 1,
});
