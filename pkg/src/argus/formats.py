"""External representations: model documents, network/report trees, DOT.

The interchange document is a small JSON-compatible tree; a YAML surface
syntax is accepted and normalized to the same tree. Canonical output is
one line per top-level section with JSON-encoded values, which is both
valid YAML and byte-stable across runs.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Optional, Sequence

import yaml

from .errors import DocumentSyntaxError, SchemaError
from .model import (
    ArgumentEdge,
    ArgumentKind,
    ArgumentModel,
    ArgumentNode,
    ArgumentSpec,
    EdgeKind,
    NodeKind,
    SpecChild,
    build_model,
)
from .network import ConfidenceNetwork, NoisyAnd, NoisyOr, Origin, Simple, topological_order
from .propagation import PropagationResult
from .sensitivity import TornadoReport

DOCUMENT_VERSION = 1

_TOP_LEVEL_KEYS = ("version", "nodes", "edges", "arguments", "confidence", "context_weights")

def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def sig12(value: float) -> float:
    """Round to 12 significant digits for report serialization."""
    return float(f"{value:.12g}")


# ---------------------------------------------------------------------------
# parsing


def parse_model(text: str) -> ArgumentModel:
    """Parse a model document (YAML or JSON) and fully validate it.

    Syntax problems raise :class:`DocumentSyntaxError` with a location;
    schema problems raise :class:`SchemaError` with path-qualified entries;
    structural problems surface as :class:`ModelValidationError` from the
    model validator.
    """
    try:
        tree = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        if mark is not None:
            raise DocumentSyntaxError(str(getattr(exc, "problem", exc)), mark.line + 1, mark.column + 1) from exc
        raise DocumentSyntaxError(str(exc)) from exc
    return model_from_tree(tree)


def model_from_tree(tree: Any) -> ArgumentModel:
    """Validate a document tree against the schema, then build the model."""
    errors: list[tuple[str, str]] = []
    if tree is None:
        tree = {}
    if not isinstance(tree, Mapping):
        raise SchemaError([("", "document must be a mapping")])

    for key in tree:
        if key not in _TOP_LEVEL_KEYS:
            errors.append((str(key), "unknown key"))

    version = tree.get("version")
    if version is None:
        errors.append(("version", "required key is missing"))
    elif version != DOCUMENT_VERSION:
        errors.append(("version", f"unsupported version {version!r}; expected {DOCUMENT_VERSION}"))

    nodes = _parse_nodes(tree, errors)
    edges = _parse_edges(tree, errors)
    specs = _parse_arguments(tree, errors)
    confidences = _parse_value_map(tree, "confidence", errors)
    context_weights = _parse_value_map(tree, "context_weights", errors)

    if errors:
        raise SchemaError(errors)
    return build_model(nodes, edges, specs, confidences, context_weights)


def _parse_nodes(tree: Mapping, errors: list) -> list[ArgumentNode]:
    raw = tree.get("nodes")
    if raw is None:
        errors.append(("nodes", "required key is missing"))
        return []
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        errors.append(("nodes", "must be a list"))
        return []
    out = []
    for i, item in enumerate(raw):
        path = f"nodes[{i}]"
        if not isinstance(item, Mapping):
            errors.append((path, "must be a mapping"))
            continue
        for key in item:
            if key not in ("id", "kind", "statement"):
                errors.append((f"{path}.{key}", "unknown key"))
        node_id = _required_str(item, "id", path, errors)
        kind = _enum_value(item, "kind", NodeKind, path, errors)
        statement = item.get("statement", "")
        if not isinstance(statement, str):
            errors.append((f"{path}.statement", "must be a string"))
            statement = ""
        if node_id is not None and kind is not None:
            out.append(ArgumentNode(id=node_id, kind=kind, statement=statement))
    return out


def _parse_edges(tree: Mapping, errors: list) -> list[ArgumentEdge]:
    raw = tree.get("edges", [])
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        errors.append(("edges", "must be a list"))
        return []
    out = []
    for i, item in enumerate(raw):
        path = f"edges[{i}]"
        if not isinstance(item, Mapping):
            errors.append((path, "must be a mapping"))
            continue
        for key in item:
            if key not in ("kind", "parent", "child"):
                errors.append((f"{path}.{key}", "unknown key"))
        kind = _enum_value(item, "kind", EdgeKind, path, errors)
        parent = _required_str(item, "parent", path, errors)
        child = _required_str(item, "child", path, errors)
        if kind is not None and parent is not None and child is not None:
            out.append(ArgumentEdge(kind=kind, parent=parent, child=child))
    return out


def _parse_arguments(tree: Mapping, errors: list) -> dict[str, ArgumentSpec]:
    raw = tree.get("arguments", [])
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        errors.append(("arguments", "must be a list"))
        return {}
    out: dict[str, ArgumentSpec] = {}
    for i, item in enumerate(raw):
        path = f"arguments[{i}]"
        if not isinstance(item, Mapping):
            errors.append((path, "must be a mapping"))
            continue
        for key in item:
            if key not in ("goal", "type", "children", "leak"):
                errors.append((f"{path}.{key}", "unknown key"))
        goal = _required_str(item, "goal", path, errors)
        spec = _parse_spec(item, path, errors)
        if goal is not None and spec is not None:
            if goal in out:
                errors.append((f"{path}.goal", f"duplicate argument spec for goal {goal!r}"))
            else:
                out[goal] = spec
    return out


def _parse_spec(item: Mapping, path: str, errors: list) -> Optional[ArgumentSpec]:
    kind = _enum_value(item, "type", ArgumentKind, path, errors)
    leak = item.get("leak")
    if leak is not None:
        if not _is_number(leak) or not 0.0 <= leak <= 1.0:
            errors.append((f"{path}.leak", f"must be a number in [0, 1], got {leak!r}"))
            leak = None
        else:
            leak = float(leak)
    raw_children = item.get("children")
    if not isinstance(raw_children, Sequence) or isinstance(raw_children, str) or not raw_children:
        errors.append((f"{path}.children", "must be a non-empty list"))
        return None
    children = []
    for i, child in enumerate(raw_children):
        child_path = f"{path}.children[{i}]"
        if not isinstance(child, Mapping):
            errors.append((child_path, "must be a mapping"))
            continue
        for key in child:
            if key not in ("ref", "group", "weight"):
                errors.append((f"{child_path}.{key}", "unknown key"))
        weight = child.get("weight", 1.0)
        if not _is_number(weight) or not 0.0 <= weight <= 1.0:
            errors.append((f"{child_path}.weight", f"must be a number in [0, 1], got {weight!r}"))
            weight = 1.0
        has_ref = "ref" in child
        has_group = "group" in child
        if has_ref == has_group:
            errors.append((child_path, "needs exactly one of 'ref' or 'group'"))
            continue
        if has_ref:
            if not isinstance(child["ref"], str):
                errors.append((f"{child_path}.ref", "must be a string"))
                continue
            children.append(SpecChild(ref=child["ref"], weight=float(weight)))
        else:
            if not isinstance(child["group"], Mapping):
                errors.append((f"{child_path}.group", "must be a mapping"))
                continue
            for key in child["group"]:
                if key not in ("type", "children", "leak"):
                    errors.append((f"{child_path}.group.{key}", "unknown key"))
            group = _parse_spec(child["group"], f"{child_path}.group", errors)
            if group is not None:
                children.append(SpecChild(group=group, weight=float(weight)))
    if kind is None:
        return None
    return ArgumentSpec(kind=kind, children=tuple(children), leak=leak)


def _parse_value_map(tree: Mapping, key: str, errors: list) -> dict[str, float]:
    raw = tree.get(key, {})
    if not isinstance(raw, Mapping):
        errors.append((key, "must be a mapping"))
        return {}
    out = {}
    for name, value in raw.items():
        path = f"{key}.{name}"
        if not isinstance(name, str):
            errors.append((path, "keys must be strings"))
            continue
        if not _is_number(value) or not 0.0 <= value <= 1.0:
            errors.append((path, f"must be a number in [0, 1], got {value!r}"))
            continue
        out[name] = float(value)
    return out


def _required_str(item: Mapping, key: str, path: str, errors: list) -> Optional[str]:
    value = item.get(key)
    if not isinstance(value, str) or not value:
        errors.append((f"{path}.{key}", "must be a non-empty string"))
        return None
    return value


def _enum_value(item: Mapping, key: str, enum_type, path: str, errors: list):
    value = item.get(key)
    try:
        return enum_type(value)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_type)
        errors.append((f"{path}.{key}", f"must be one of: {allowed}; got {value!r}"))
        return None


# ---------------------------------------------------------------------------
# serialization


def model_to_tree(model: ArgumentModel) -> dict:
    """The canonical document tree for a model. Maps are key-sorted."""
    tree: dict[str, Any] = {"version": DOCUMENT_VERSION}
    nodes = []
    for node in model.nodes:
        item: dict[str, Any] = {"id": node.id, "kind": node.kind.value}
        if node.statement:
            item["statement"] = node.statement
        nodes.append(item)
    tree["nodes"] = nodes
    if model.edges:
        tree["edges"] = [
            {"kind": e.kind.value, "parent": e.parent, "child": e.child} for e in model.edges
        ]
    if model.specs:
        tree["arguments"] = [
            {"goal": goal, **_spec_to_tree(spec)} for goal, spec in model.specs.items()
        ]
    if model.leaf_confidences:
        tree["confidence"] = {k: model.leaf_confidences[k] for k in sorted(model.leaf_confidences)}
    if model.context_weights:
        tree["context_weights"] = {k: model.context_weights[k] for k in sorted(model.context_weights)}
    return tree


def _spec_to_tree(spec: ArgumentSpec) -> dict:
    out: dict[str, Any] = {"type": spec.kind.value, "children": []}
    for child in spec.children:
        if child.ref is not None:
            out["children"].append({"ref": child.ref, "weight": child.weight})
        else:
            assert child.group is not None
            out["children"].append({"group": _spec_to_tree(child.group), "weight": child.weight})
    if spec.leak is not None:
        out["leak"] = spec.leak
    return out


def serialize_model(model: ArgumentModel) -> str:
    """Canonical text form: one YAML line per non-empty section, LF endings.

    Round-trip safe: ``parse_model(serialize_model(m))`` equals ``m``.
    """
    tree = model_to_tree(model)
    lines = []
    for key in _TOP_LEVEL_KEYS:
        if key in tree:
            lines.append(f"{key}: {json.dumps(tree[key], ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def network_to_tree(network: ConfidenceNetwork) -> dict:
    """Serialized network, nodes in topological order."""
    nodes = []
    for node_id in topological_order(network):
        node = network.nodes[node_id]
        item: dict[str, Any] = {"id": node.id, "origin": node.origin.value}
        if node.source is not None:
            item["source"] = node.source
        item["parents"] = list(node.parents)
        item["combinator"] = _combinator_to_tree(node.combinator)
        nodes.append(item)
    return {"root": network.root, "nodes": nodes}


def _combinator_to_tree(combinator) -> Optional[dict]:
    if combinator is None:
        return None
    if isinstance(combinator, Simple):
        return {"type": "simple", "weight": combinator.weight}
    if isinstance(combinator, NoisyOr):
        return {"type": "noisy_or", "weights": list(combinator.weights)}
    assert isinstance(combinator, NoisyAnd)
    return {
        "type": "noisy_and",
        "weights": list(combinator.weights),
        "leak": combinator.leak,
        "leak_is_default": combinator.leak_is_default,
    }


def result_to_tree(result: PropagationResult, report: Optional[TornadoReport] = None) -> dict:
    """Report document: root confidence, per-node values, optional tornado."""
    tree: dict[str, Any] = {
        "root_confidence": sig12(result.root_confidence),
        "per_node": {node_id: sig12(g) for node_id, g in result.values.items()},
    }
    if report is not None:
        tree["tornado"] = tornado_to_tree(report)
    return tree


def tornado_to_tree(report: TornadoReport, top: Optional[int] = None) -> dict:
    entries = report.entries if top is None else report.entries[: max(0, top)]
    return {
        "target": report.target,
        "baseline": sig12(report.baseline_target),
        "entries": [
            {
                "variable": {
                    "kind": e.variable.kind.value,
                    "key": e.variable.key,
                    "label": e.variable.label,
                },
                "at_min": sig12(e.value_at_min),
                "at_max": sig12(e.value_at_max),
                "width": sig12(e.width),
                "increases_at": e.increases_at,
            }
            for e in entries
        ],
    }


_SHAPES = {Origin.LEAF: "ellipse", Origin.DERIVED: "box", Origin.INTERMEDIATE: "diamond"}


def export_dot(network: ConfidenceNetwork, result: Optional[PropagationResult] = None) -> str:
    """Graphviz DOT form of the network; deterministic (ids sorted).

    Leaves render as ellipses, derived nodes as boxes, intermediates as
    diamonds. Edge labels carry the weights; node labels carry computed
    confidence to 4 decimals when a result is supplied.
    """
    lines = ["digraph confidence_network {", "  rankdir=BT;"]
    for node_id in sorted(network.nodes):
        node = network.nodes[node_id]
        label = node_id
        if result is not None:
            label = f"{node_id}\\ng={result.values[node_id]:.4f}"
        lines.append(f'  "{node_id}" [shape={_SHAPES[node.origin]}, label="{label}"];')
    for node_id in sorted(network.nodes):
        node = network.nodes[node_id]
        if node.combinator is None:
            continue
        weights = (
            (node.combinator.weight,)
            if isinstance(node.combinator, Simple)
            else node.combinator.weights
        )
        for parent, weight in zip(node.parents, weights):
            lines.append(f'  "{parent}" -> "{node_id}" [label="{weight!r}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
