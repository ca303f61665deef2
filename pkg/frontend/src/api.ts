/**
 * Typed client for the /v1 API. All solver math happens on the other side
 * of these calls.
 */

import type {
  ApiErrorBody,
  ChainRequest,
  ChainResponse,
  DynamicRequest,
  DynamicResponse,
  HealthResponse,
  ShiftRequest,
  ShiftResponse,
  StaticRequest,
  StaticResponse,
  TraceResponse,
  Frontier,
} from './types.js';

/** A 4xx with a machine-readable code and the offending field's path. */
export class ServiceFieldError extends Error {
  readonly code: string;
  readonly path: string | null;
  readonly status: number;

  constructor(status: number, code: string, message: string, path: string | null) {
    super(message);
    this.name = 'ServiceFieldError';
    this.status = status;
    this.code = code;
    this.path = path;
  }
}

/** Network-level failure: service down, CORS, DNS, ... */
export class ServiceUnreachableError extends Error {
  constructor(cause: unknown) {
    super(`service unreachable: ${cause instanceof Error ? cause.message : String(cause)}`);
    this.name = 'ServiceUnreachableError';
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl;
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async post<T>(route: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${route}`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body),
      });
    } catch (cause) {
      throw new ServiceUnreachableError(cause);
    }
    if (!response.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body: fall through to the generic error below
      }
      if (parsed && parsed.error) {
        throw new ServiceFieldError(
          response.status,
          parsed.error.code,
          parsed.error.message,
          parsed.error.path,
        );
      }
      throw new ServiceFieldError(response.status, 'HTTP_ERROR', `HTTP ${response.status}`, null);
    }
    return (await response.json()) as T;
  }

  solveStatic(request: StaticRequest): Promise<StaticResponse> {
    return this.post('/v1/solve/static', request);
  }

  solveDynamic(request: DynamicRequest): Promise<DynamicResponse> {
    return this.post('/v1/solve/dynamic', request);
  }

  solveChain(request: ChainRequest): Promise<ChainResponse> {
    return this.post('/v1/solve/chain', request);
  }

  trace(frontier: Frontier, n: number): Promise<TraceResponse> {
    return this.post('/v1/trace', { frontier, n });
  }

  shift(request: ShiftRequest): Promise<ShiftResponse> {
    return this.post('/v1/shift', request);
  }

  async health(): Promise<HealthResponse> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}/v1/health`);
    } catch (cause) {
      throw new ServiceUnreachableError(cause);
    }
    return (await response.json()) as HealthResponse;
  }
}
