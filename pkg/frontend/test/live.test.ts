/** Optional integration against a running service.
 *
 * Start one with:  argus serve --port 8000 --model fixtures/alt_example.yaml
 * then run:        ARGUS_SERVICE_URL=http://127.0.0.1:8000 npm test
 */

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { tornadoBars } from "../src/tornado.js";

const base = process.env.ARGUS_SERVICE_URL;

describe.skipIf(!base)("live service", () => {
  const api = new ApiClient(base!);

  it("slider move round-trip: B at 1.0 raises the root to 0.949", async () => {
    const baseline = await api.evaluate({});
    expect(baseline.root_confidence).toBeCloseTo(0.8572, 9);
    const moved = await api.evaluate({ B: 1.0 });
    expect(moved.root_confidence).toBeCloseTo(0.949, 9);
    expect(moved.revision).toBe(baseline.revision);
  });

  it("tornado bars follow the report order with g(B) on top", async () => {
    const response = await api.tornado("A");
    const bars = tornadoBars(response.tornado);
    expect(bars.map((b) => b.key)).toEqual(
      response.tornado.entries.map((e) => e.variable.key),
    );
    expect(bars[0]!.label).toBe("g(B)");
    expect(bars[0]!.lo).toBeCloseTo(0.49, 9);
    expect(bars[0]!.hi).toBeCloseTo(0.949, 9);
  });
});
