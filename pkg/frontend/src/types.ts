/**
 * Wire types for the /v1 API. The client displays these values verbatim
 * (after unit-scale formatting); it never recomputes them.
 */

export type Frontier = { a: number; b: number; c: number };
export type Valuation = { p_life: number; p_job: number };
export type AllocationPoint = { lives_saved: number; jobs_saved: number };

export type DynamicPrices = {
  p_life_1: number;
  p_job_1: number;
  p_life_2: number;
  p_job_2: number;
};

export type StaticRequest = {
  frontier: Frontier;
  valuation: Valuation;
  unit_scale?: number;
  verify?: boolean;
  oracle_points?: number;
};

export type DynamicRequest = {
  constraint1: Frontier;
  constraint2: Frontier;
  prices: DynamicPrices;
  discount_rate: number;
  unit_scale?: number;
};

export type ChainConstraint = Frontier & { lives_period: number; jobs_period: number };

export type ChainRequest = {
  constraints: ChainConstraint[];
  lives_prices: number[];
  jobs_prices: number[];
  discount_rate: number;
  horizon: number;
  unit_scale?: number;
};

export type ShiftRequest = {
  frontier: Frontier;
  shift: { kind: 'level' | 'proportional' | 'per_axis'; factors: number[] };
};

export type StaticKkt = {
  stationarity_lives: number;
  stationarity_jobs: number;
  feasibility: number;
  multiplier_nonnegative: boolean;
  max_residual: number;
  passed: boolean;
};

export type DynamicKkt = {
  stationarity_lives_1: number;
  stationarity_jobs_1: number;
  stationarity_lives_2: number;
  stationarity_jobs_2: number;
  feasibility_1: number;
  feasibility_2: number;
  multipliers_nonnegative: boolean;
  max_residual: number;
  passed: boolean;
};

export type OracleDiagnostics = {
  best_z: number;
  n_points: number;
  gap: number;
  relative_gap: number;
  best_allocation?: AllocationPoint;
};

export type StaticResponse = {
  kind: 'static';
  unit_scale: number;
  solution: {
    allocation: AllocationPoint;
    multiplier: number;
    z_star: number;
    z_star_scaled: number;
  };
  optimality_ratio: number | null;
  tangent: AllocationPoint[];
  diagnostics: { kkt: StaticKkt; oracle?: OracleDiagnostics };
};

export type DynamicResponse = {
  kind: 'dynamic';
  unit_scale: number;
  solution: {
    allocations: { lives_1: number; jobs_1: number; lives_2: number; jobs_2: number };
    multipliers: [number, number];
    z_star: number;
    z_star_scaled: number;
  };
  optimality_ratios: [number | null, number | null];
  diagnostics: { kkt: DynamicKkt; oracle?: OracleDiagnostics };
};

export type ChainResponse = {
  kind: 'chain';
  unit_scale: number;
  solution: {
    per_constraint: Array<{
      lives_period: number;
      jobs_period: number;
      allocation: AllocationPoint;
      multiplier: number;
      z_star: number;
    }>;
    z_total: number;
    z_total_scaled: number;
  };
};

export type TraceResponse = {
  frontier: Frontier;
  n: number;
  intercepts: { lives: number; jobs: number };
  points: Array<{ theta: number; lives_saved: number; jobs_saved: number }>;
};

export type ShiftResponse = {
  frontier: Frontier;
  shift: { kind: string; factors: number[] };
  shifted: Frontier;
  intercepts: { lives: number; jobs: number };
};

export type HealthResponse = {
  status: string;
  service: string;
  version: string;
  scenario_format_version: string;
};

export type ApiErrorBody = { error: { code: string; message: string; path: string | null } };
