/** Wire types for the confidence service. All values echo the server verbatim. */

export type OriginKind = "leaf" | "derived" | "intermediate";

export interface CombinatorDoc {
  type: "simple" | "noisy_or" | "noisy_and";
  weight?: number;
  weights?: number[];
  leak?: number;
  leak_is_default?: boolean;
}

export interface NetworkNodeDoc {
  id: string;
  origin: OriginKind;
  source?: string;
  parents: string[];
  combinator: CombinatorDoc | null;
}

export interface NetworkDoc {
  root: string;
  nodes: NetworkNodeDoc[];
}

export interface ModelNodeDoc {
  id: string;
  kind: "goal" | "strategy" | "solution" | "context";
  statement?: string;
}

export interface SpecChildDoc {
  ref?: string;
  group?: SpecGroupDoc;
  weight: number;
}

export interface SpecGroupDoc {
  type: "alternative" | "complementary";
  children: SpecChildDoc[];
  leak?: number;
}

export interface ArgumentDoc extends SpecGroupDoc {
  goal: string;
}

export interface ModelDocument {
  version: number;
  nodes: ModelNodeDoc[];
  edges?: { kind: string; parent: string; child: string }[];
  arguments?: ArgumentDoc[];
  confidence?: Record<string, number>;
  context_weights?: Record<string, number>;
}

export interface ModelResponse {
  revision: number;
  model: ModelDocument;
}

export interface NetworkResponse {
  revision: number;
  network: NetworkDoc;
}

export interface EvaluateResponse {
  revision: number;
  root_confidence: number;
  per_node: Record<string, number>;
}

export interface TornadoEntryDoc {
  variable: { kind: string; key: string; label: string };
  at_min: number;
  at_max: number;
  width: number;
  increases_at: "min" | "max" | "none";
}

export interface TornadoDoc {
  target: string;
  baseline: number;
  entries: TornadoEntryDoc[];
}

export interface TornadoResponse {
  revision: number;
  tornado: TornadoDoc;
}

export interface ServiceError {
  code: string;
  message: string;
  violations?: { code: string; path: string; message: string }[];
  errors?: { path: string; message: string }[];
}
