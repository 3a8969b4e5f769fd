/** End-to-end workflows against recorded service responses (acceptance 12/13). */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { RequestCoalescer } from "../src/coalesce.js";
import { renderGraphSvg } from "../src/graph.js";
import { SessionStore } from "../src/state.js";
import type { EvaluateResponse, ModelDocument, NetworkDoc } from "../src/types.js";
import { recorded } from "./fixtures.js";

type Handler = (body: string | undefined) => { status: number; body: unknown };

function mockService(routes: Record<string, Handler>) {
  const calls: { url: string; body: string | undefined }[] = [];
  const fetchImpl = async (url: string, init?: RequestInit) => {
    const body = init?.body as string | undefined;
    calls.push({ url, body });
    const handler = routes[url];
    if (!handler) throw new Error(`unmocked route ${url}`);
    const { status, body: payload } = handler(body);
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fetchImpl, calls };
}

function makeStore(): SessionStore {
  const store = new SessionStore(
    recorded.alt.model.model as unknown as ModelDocument,
    recorded.alt.network.network as unknown as NetworkDoc,
    recorded.alt.model.revision,
  );
  store.applyBaseline(recorded.alt.evaluateBaseline as unknown as EvaluateResponse);
  return store;
}

describe("slider workflow (root badge follows the service)", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("moving slider B from 0.8 to 1.0 updates the root 0.8572 -> 0.949 in one round-trip", async () => {
    const { fetchImpl, calls } = mockService({
      "/api/evaluate": (body) => {
        const overrides = JSON.parse(body!).overrides as Record<string, number>;
        return {
          status: 200,
          body:
            overrides["B"] === 1.0
              ? recorded.alt.evaluateB1
              : recorded.alt.evaluateBaseline,
        };
      },
    });
    const api = new ApiClient("", fetchImpl);
    const store = makeStore();
    const coalescer = new RequestCoalescer<Record<string, number>>(async (overrides) => {
      store.applyEvaluation(await api.evaluate(overrides));
    }, 150);

    expect(store.current["A"]).toBe(0.8572);

    // user drags the slider through intermediate positions to 1.0
    for (const position of [0.85, 0.9, 0.95, 1.0]) {
      store.setOverride("B", position);
      coalescer.request(store.flatOverrides());
      await vi.advanceTimersByTimeAsync(40);
    }
    await vi.advanceTimersByTimeAsync(200);

    expect(calls.length).toBe(1); // one evaluate round-trip for the whole drag
    expect(store.current["A"]).toBe(0.949);

    const before = renderGraphSvg(
      store.network,
      store.baseline,
      store.baseline,
      false,
    );
    expect(before).toContain("A  0.857");
    const after = renderGraphSvg(store.network, store.current, store.baseline, false);
    expect(after).toContain("A  0.949");
    expect(after).toContain("0.857 → 0.949"); // diff badge against baseline
  });

  it("reset restores the initial render", async () => {
    const store = makeStore();
    store.setOverride("B", 1.0);
    store.applyEvaluation(recorded.alt.evaluateB1 as unknown as EvaluateResponse);
    const initial = renderGraphSvg(store.network, store.baseline, store.baseline, false);
    store.reset();
    const restored = renderGraphSvg(store.network, store.current, store.baseline, false);
    expect(restored).toBe(initial);
  });

  it("server rejection surfaces as an ApiError with the service message", async () => {
    const { fetchImpl } = mockService({
      "/api/evaluate": () => ({
        status: 422,
        body: { code: "ValueOutOfRange", message: "override B must lie in [0, 1]" },
      }),
    });
    const api = new ApiClient("", fetchImpl);
    await expect(api.evaluate({ B: 1.5 })).rejects.toSatisfy(
      (error: unknown) =>
        error instanceof ApiError &&
        error.status === 422 &&
        error.body.code === "ValueOutOfRange",
    );
  });
});

describe("tornado workflow", () => {
  it("chart bar order matches the service's entry order exactly", async () => {
    const { fetchImpl } = mockService({
      "/api/tornado": () => ({ status: 200, body: recorded.alt.tornado }),
    });
    const api = new ApiClient("", fetchImpl);
    const response = await api.tornado("A");
    const { tornadoBars } = await import("../src/tornado.js");
    const bars = tornadoBars(response.tornado);
    expect(bars.map((b) => b.key)).toEqual(
      recorded.alt.tornado.tornado.entries.map((e) => e.variable.key),
    );
  });
});

describe("graph rendering", () => {
  it("colors nodes from the current values and never invents numbers", () => {
    const store = makeStore();
    const svg = renderGraphSvg(store.network, store.current, store.baseline, false);
    for (const [id, g] of Object.entries(store.current)) {
      expect(svg).toContain(`${id}  ${g.toFixed(3)}`);
    }
    expect(svg.match(/<g data-node=/g)!.length).toBe(store.network.nodes.length);
  });
});
