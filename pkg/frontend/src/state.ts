/** Session state: server snapshot, slider overrides, and document export.
 *
 * The store never recomputes combinators; `current` always holds the last
 * completed server response, and sliders only accumulate override keys in
 * the exact syntax POST /api/evaluate accepts.
 */

import type {
  ArgumentDoc,
  EvaluateResponse,
  ModelDocument,
  NetworkDoc,
  NetworkNodeDoc,
  SpecChildDoc,
  SpecGroupDoc,
} from "./types.js";

export interface SliderSpec {
  key: string; // override key: ID, w:NODE:IDX, or v:NODE
  label: string;
  kind: "confidence" | "weight" | "leak";
  initial: number;
}

export class SessionStore {
  readonly byId: Map<string, NetworkNodeDoc>;
  readonly overrides = new Map<string, number>();
  baseline: Record<string, number> = {};
  current: Record<string, number> = {};
  revision: number;
  stale = false;
  lastError: { key: string; message: string } | null = null;

  constructor(
    readonly document: ModelDocument,
    readonly network: NetworkDoc,
    revision: number,
  ) {
    this.revision = revision;
    this.byId = new Map(network.nodes.map((n) => [n.id, n]));
  }

  applyBaseline(response: EvaluateResponse): void {
    this.baseline = { ...response.per_node };
    this.current = { ...response.per_node };
    this.revision = response.revision;
    this.stale = false;
  }

  applyEvaluation(response: EvaluateResponse): void {
    this.current = { ...response.per_node };
    this.revision = response.revision;
    this.stale = false;
    this.lastError = null;
  }

  setOverride(key: string, value: number): void {
    this.overrides.set(key, value);
  }

  reset(): void {
    this.overrides.clear();
    this.current = { ...this.baseline };
    this.lastError = null;
  }

  flatOverrides(): Record<string, number> {
    return Object.fromEntries(this.overrides);
  }

  /** One slider per leaf confidence, per weight, per explicit leak. */
  sliders(): SliderSpec[] {
    const out: SliderSpec[] = [];
    const leafIds = this.network.nodes
      .filter((n) => n.origin === "leaf")
      .map((n) => n.id)
      .sort();
    for (const id of leafIds) {
      out.push({
        key: id,
        label: `g(${id})`,
        kind: "confidence",
        initial: this.document.confidence?.[id] ?? 0,
      });
    }
    const derived = this.network.nodes.filter((n) => n.combinator !== null);
    derived.sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0));
    for (const node of derived) {
      const weights = combinatorWeights(node);
      node.parents.forEach((parent, index) => {
        out.push({
          key: `w:${node.id}:${index}`,
          label: `w(${node.id}<-${parent})`,
          kind: "weight",
          initial: weights[index] ?? 1,
        });
      });
    }
    for (const node of derived) {
      const c = node.combinator;
      if (c && c.type === "noisy_and" && c.leak_is_default === false) {
        out.push({
          key: `v:${node.id}`,
          label: `v(${node.id})`,
          kind: "leak",
          initial: c.leak ?? 1,
        });
      }
    }
    return out;
  }

  /** The current what-if state folded back into a model document. */
  exportDocument(): { document: ModelDocument; skipped: string[] } {
    return exportWhatIf(this.document, this.network, this.flatOverrides());
  }
}

export function combinatorWeights(node: NetworkNodeDoc): number[] {
  const c = node.combinator;
  if (!c) return [];
  if (c.type === "simple") return [c.weight ?? 1];
  return c.weights ?? [];
}

/* ----------------------------------------------------------------------
 * Export: map override keys back to document locations.
 *
 * Spec-tree entries align one-to-one, in order, with the derived node's
 * parent list (or with the grouping intermediate's parents when an
 * alternative argument carries contexts), so weights can be written back
 * without re-deriving the transformation.
 */

type WeightTargets = Map<string, (value: number) => void>;

export function exportWhatIf(
  document: ModelDocument,
  network: NetworkDoc,
  overrides: Record<string, number>,
): { document: ModelDocument; skipped: string[] } {
  const out: ModelDocument = JSON.parse(JSON.stringify(document));
  const skipped: string[] = [];
  out.confidence = { ...(out.confidence ?? {}) };
  out.context_weights = { ...(out.context_weights ?? {}) };
  out.arguments = out.arguments ?? [];

  const byId = new Map(network.nodes.map((n) => [n.id, n]));
  const kinds = new Map(document.nodes.map((n) => [n.id, n.kind]));
  const specs = new Map(out.arguments.map((a) => [a.goal, a as SpecGroupDoc]));
  const targets: WeightTargets = new Map();

  for (const node of network.nodes) {
    if (node.origin !== "derived" || !node.combinator) continue;
    let spec = specs.get(node.id);
    if (!spec) {
      spec = synthesizeSpec(node, byId, kinds);
      out.arguments.push({ goal: node.id, ...spec });
      specs.set(node.id, spec);
    }
    registerGoalTargets(node, spec, byId, kinds, out, targets);
  }

  for (const [key, value] of Object.entries(overrides)) {
    if (key.startsWith("w:")) {
      const setter = targets.get(key);
      if (setter) setter(value);
      else skipped.push(key);
    } else if (key.startsWith("v:")) {
      const spec = specs.get(key.slice(2));
      if (spec && spec.leak !== undefined) spec.leak = value;
      else skipped.push(key);
    } else {
      out.confidence[key] = value;
    }
  }
  if (Object.keys(out.context_weights).length === 0) delete out.context_weights;
  if (out.arguments.length === 0) delete out.arguments;
  return { document: out, skipped };
}

function synthesizeSpec(
  node: NetworkNodeDoc,
  byId: Map<string, NetworkNodeDoc>,
  kinds: Map<string, string>,
): SpecGroupDoc {
  // a goal with no declared argument: complementary over its non-context parents
  const weights = combinatorWeights(node);
  const children: SpecChildDoc[] = [];
  node.parents.forEach((parent, index) => {
    if (kinds.get(parent) !== "context") {
      children.push({ ref: parent, weight: weights[index] ?? 1 });
    }
  });
  return { type: "complementary", children };
}

function registerGoalTargets(
  node: NetworkNodeDoc,
  spec: SpecGroupDoc,
  byId: Map<string, NetworkNodeDoc>,
  kinds: Map<string, string>,
  out: ModelDocument,
  targets: WeightTargets,
): void {
  const contextCount = node.parents.filter((p) => kinds.get(p) === "context").length;
  const plainCount = node.parents.length - contextCount;
  let entryParents = node.parents.slice(0, plainCount);
  let entryNode = node;

  if (
    spec.type === "alternative" &&
    contextCount > 0 &&
    plainCount === 1 &&
    spec.children.length > 1
  ) {
    // the alternative children live under the generated grouping node
    const groupingId = node.parents[0]!;
    const grouping = byId.get(groupingId);
    if (grouping && grouping.origin === "intermediate") {
      entryNode = grouping;
      entryParents = [...grouping.parents];
    }
  }

  node.parents.forEach((parent, index) => {
    if (kinds.get(parent) === "context") {
      targets.set(`w:${node.id}:${index}`, (value) => {
        out.context_weights![parent] = value;
      });
    }
  });
  alignGroup(spec, entryNode, entryParents, byId, targets);
}

function alignGroup(
  group: SpecGroupDoc,
  node: NetworkNodeDoc,
  parents: string[],
  byId: Map<string, NetworkNodeDoc>,
  targets: WeightTargets,
): void {
  if (group.children.length !== parents.length) return; // shape mismatch; leave unmapped
  group.children.forEach((child, index) => {
    const parentId = parents[index]!;
    targets.set(`w:${node.id}:${index}`, (value) => {
      child.weight = value;
    });
    if (child.group) {
      const inner = byId.get(parentId);
      if (inner && inner.origin === "intermediate") {
        alignGroup(child.group, inner, [...inner.parents], byId, targets);
      }
    }
  });
}
