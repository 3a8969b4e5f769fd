/** Thin typed client for the confidence service routes. */

import type {
  EvaluateResponse,
  ModelDocument,
  ModelResponse,
  NetworkResponse,
  ServiceError,
  TornadoResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ServiceError,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ServiceError);
    }
    return body as T;
  }

  getModel(): Promise<ModelResponse> {
    return this.request("/api/model");
  }

  putModel(document: ModelDocument): Promise<{ revision: number }> {
    return this.request("/api/model", {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(document),
    });
  }

  getNetwork(): Promise<NetworkResponse> {
    return this.request("/api/network");
  }

  evaluate(overrides: Record<string, number>): Promise<EvaluateResponse> {
    return this.request("/api/evaluate", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ overrides }),
    });
  }

  tornado(target: string, top?: number): Promise<TornadoResponse> {
    const body: { target: string; top?: number } = { target };
    if (top !== undefined) body.top = top;
    return this.request("/api/tornado", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }
}
