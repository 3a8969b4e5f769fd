import { describe, expect, it } from "vitest";

import { layoutNetwork } from "../src/layout.js";
import type { NetworkDoc } from "../src/types.js";
import { recorded } from "./fixtures.js";

const fig9 = recorded.fig9.network.network as unknown as NetworkDoc;

describe("layoutNetwork", () => {
  it("positions every node", () => {
    const { positions } = layoutNetwork(fig9);
    expect(new Set(positions.keys())).toEqual(new Set(["A", "B", "C", "D", "I_B_C"]));
  });

  it("ranks by longest path from the leaves", () => {
    const { positions } = layoutNetwork(fig9);
    expect(positions.get("B")!.rank).toBe(0);
    expect(positions.get("I_B_C")!.rank).toBe(1);
    expect(positions.get("A")!.rank).toBe(2);
  });

  it("draws the root above its parents", () => {
    const { positions } = layoutNetwork(fig9);
    expect(positions.get("A")!.y).toBeLessThan(positions.get("I_B_C")!.y);
    expect(positions.get("I_B_C")!.y).toBeLessThan(positions.get("B")!.y);
  });

  it("keeps the drawing inside the reported bounds", () => {
    const { positions, width, height } = layoutNetwork(fig9);
    for (const pos of positions.values()) {
      expect(pos.x).toBeGreaterThanOrEqual(0);
      expect(pos.y).toBeGreaterThanOrEqual(0);
      expect(pos.x).toBeLessThan(width);
      expect(pos.y).toBeLessThan(height);
    }
  });
});
