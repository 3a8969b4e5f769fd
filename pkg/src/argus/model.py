"""GSN safety-case models: typed argument graphs with confidence annotations.

An :class:`ArgumentModel` holds the four GSN node kinds (Goal, Strategy,
Solution, Context), the two edge kinds (supported-by, in-context-of), the
per-goal argument specifications (alternative or complementary, with child
weights), and the confidence values assigned to the leaves. Construction
goes through :func:`build_model`, which validates everything and reports
the complete list of violations rather than stopping at the first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import (
    ModelValidationError,
    UnknownReferenceError,
    Violation,
    ViolationCode,
)

NodeId = str

RESERVED_PREFIX = "I_"
_ID_PATTERN = re.compile(r"^[A-Za-z0-9_.\-]+$")


class NodeKind(Enum):
    GOAL = "goal"
    STRATEGY = "strategy"
    SOLUTION = "solution"
    CONTEXT = "context"


class EdgeKind(Enum):
    SUPPORTED_BY = "supported_by"
    IN_CONTEXT_OF = "in_context_of"


class ArgumentKind(Enum):
    ALTERNATIVE = "alternative"
    COMPLEMENTARY = "complementary"


@dataclass(frozen=True)
class ArgumentNode:
    """One GSN element: a claim, an inference description, evidence, or context."""

    id: NodeId
    kind: NodeKind
    statement: str = ""


@dataclass(frozen=True)
class ArgumentEdge:
    """A directed relation from a claim to what supports or contextualizes it.

    ``parent`` is always the claim being supported (supported-by) or
    contextualized (in-context-of); ``child`` is the supporting or
    contextual element.
    """

    kind: EdgeKind
    parent: NodeId
    child: NodeId


@dataclass(frozen=True)
class SpecChild:
    """One entry of an argument spec: a node reference or a nested group."""

    ref: Optional[NodeId] = None
    group: Optional["ArgumentSpec"] = None
    weight: float = 1.0

    def __post_init__(self) -> None:
        if (self.ref is None) == (self.group is None):
            raise ValueError("SpecChild takes exactly one of ref or group")


@dataclass(frozen=True)
class ArgumentSpec:
    """How a goal combines its supporting children: alternative or complementary.

    ``leak`` overrides the complementary combinator's residual strength;
    when absent it is derived as the mean of the weights.
    """

    kind: ArgumentKind
    children: tuple[SpecChild, ...]
    leak: Optional[float] = None


@dataclass(frozen=True, eq=True)
class ArgumentModel:
    """A validated GSN model. Immutable; all operations are pure reads."""

    nodes: tuple[ArgumentNode, ...]
    edges: tuple[ArgumentEdge, ...]
    specs: Mapping[NodeId, ArgumentSpec] = field(default_factory=dict)
    leaf_confidences: Mapping[NodeId, float] = field(default_factory=dict)
    context_weights: Mapping[NodeId, float] = field(default_factory=dict)

    @cached_property
    def by_id(self) -> Mapping[NodeId, ArgumentNode]:
        return {n.id: n for n in self.nodes}

    def node(self, node_id: NodeId) -> ArgumentNode:
        try:
            return self.by_id[node_id]
        except KeyError:
            raise UnknownReferenceError(f"unknown node id {node_id!r}") from None

    @cached_property
    def root(self) -> NodeId:
        """The unique goal with no incoming edge. Assumes a validated model."""
        children = {e.child for e in self.edges}
        roots = [n.id for n in self.nodes if n.id not in children]
        if len(roots) != 1:
            raise UnknownReferenceError(f"model does not have a unique root: {sorted(roots)}")
        return roots[0]

    def contexts_of(self, goal: NodeId) -> tuple[NodeId, ...]:
        """Contexts attached to ``goal``, directly or via its strategies.

        A context hung on a strategy contextualizes the strategy's owning
        goal. Order follows edge declaration order.
        """
        out = []
        for edge in self.edges:
            if edge.kind is not EdgeKind.IN_CONTEXT_OF:
                continue
            holder = self.by_id.get(edge.parent)
            if holder is None:
                continue
            if holder.kind is NodeKind.GOAL and holder.id == goal:
                out.append(edge.child)
            elif holder.kind is NodeKind.STRATEGY:
                if goal in self._owning_goals(holder.id):
                    out.append(edge.child)
        return tuple(out)

    def _owning_goals(self, strategy: NodeId) -> frozenset[NodeId]:
        """Nearest goal ancestors of a strategy along supported-by edges."""
        goals: set[NodeId] = set()
        pending = [strategy]
        seen: set[NodeId] = set()
        while pending:
            current = pending.pop()
            if current in seen:
                continue
            seen.add(current)
            for edge in self.edges:
                if edge.kind is EdgeKind.SUPPORTED_BY and edge.child == current:
                    holder = self.by_id.get(edge.parent)
                    if holder is None:
                        continue
                    if holder.kind is NodeKind.GOAL:
                        goals.add(holder.id)
                    elif holder.kind is NodeKind.STRATEGY:
                        pending.append(holder.id)
        return frozenset(goals)


def support_children(model: ArgumentModel, goal: NodeId) -> tuple[NodeId, ...]:
    """Directly supporting goals and solutions of ``goal``, in declaration order.

    Strategies are flattened away: a strategy's supporting children are
    lifted to the goal and the strategy itself contributes nothing.
    """
    node = model.node(goal)
    if node.kind is not NodeKind.GOAL:
        raise UnknownReferenceError(f"{goal!r} is a {node.kind.value}, not a goal")
    return tuple(_flatten_support(model, goal, set()))


def _flatten_support(model: ArgumentModel, node_id: NodeId, visiting: set[NodeId]) -> list[NodeId]:
    if node_id in visiting:  # cycle guard; validated models never hit this
        return []
    visiting.add(node_id)
    out: list[NodeId] = []
    for edge in model.edges:
        if edge.kind is not EdgeKind.SUPPORTED_BY or edge.parent != node_id:
            continue
        child = model.by_id.get(edge.child)
        if child is None:
            continue
        if child.kind is NodeKind.STRATEGY:
            out.extend(_flatten_support(model, child.id, visiting))
        else:
            out.append(child.id)
    visiting.discard(node_id)
    return out


def leaves(model: ArgumentModel) -> frozenset[NodeId]:
    """Solutions, contexts, and undeveloped goals (goals with no support)."""
    out: set[NodeId] = set()
    for node in model.nodes:
        if node.kind in (NodeKind.SOLUTION, NodeKind.CONTEXT):
            out.add(node.id)
        elif node.kind is NodeKind.GOAL and not _flatten_support(model, node.id, set()):
            out.add(node.id)
    return frozenset(out)


def build_model(
    nodes: Iterable[ArgumentNode],
    edges: Iterable[ArgumentEdge] = (),
    specs: Optional[Mapping[NodeId, ArgumentSpec]] = None,
    confidences: Optional[Mapping[NodeId, float]] = None,
    context_weights: Optional[Mapping[NodeId, float]] = None,
) -> ArgumentModel:
    """Assemble and validate an :class:`ArgumentModel`.

    Raises :class:`ModelValidationError` carrying the full list of
    violations. Structural problems (bad ids, dangling references, illegal
    edges, cycles, root trouble) are reported together first; semantic
    checks (spec coverage, confidence totality) run only on a structurally
    sound graph, again reporting every finding at once.
    """
    model = ArgumentModel(
        nodes=tuple(nodes),
        edges=tuple(edges),
        specs=dict(specs or {}),
        leaf_confidences=dict(confidences or {}),
        context_weights=dict(context_weights or {}),
    )
    violations = _validate_structure(model)
    if violations:
        raise ModelValidationError(violations)
    violations = _validate_semantics(model)
    if violations:
        raise ModelValidationError(violations)
    return model


def _in_unit(value: object) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and 0.0 <= value <= 1.0


_SUPPORT_PARENTS = (NodeKind.GOAL, NodeKind.STRATEGY)
_SUPPORT_CHILDREN = (NodeKind.GOAL, NodeKind.STRATEGY, NodeKind.SOLUTION)


def _validate_structure(model: ArgumentModel) -> list[Violation]:
    found: list[Violation] = []
    seen: dict[NodeId, int] = {}
    for i, node in enumerate(model.nodes):
        path = f"nodes[{i}]"
        if not isinstance(node.id, str) or not _ID_PATTERN.match(node.id or ""):
            found.append(Violation(ViolationCode.INVALID_ID, path, f"id {node.id!r} is not a valid token"))
        elif node.id.startswith(RESERVED_PREFIX):
            found.append(
                Violation(
                    ViolationCode.INVALID_ID,
                    path,
                    f"id {node.id!r} uses the prefix {RESERVED_PREFIX!r}, reserved for generated nodes",
                )
            )
        if node.id in seen:
            found.append(
                Violation(
                    ViolationCode.DUPLICATE_ID,
                    path,
                    f"id {node.id!r} already declared at nodes[{seen[node.id]}]",
                )
            )
        else:
            seen[node.id] = i

    kinds = {n.id: n.kind for n in model.nodes}
    edge_seen: dict[tuple, int] = {}
    context_attachments: dict[NodeId, list[int]] = {}
    for i, edge in enumerate(model.edges):
        path = f"edges[{i}]"
        dangling = False
        for end, name in ((edge.parent, "parent"), (edge.child, "child")):
            if end not in kinds:
                found.append(
                    Violation(ViolationCode.UNKNOWN_REFERENCE, f"{path}.{name}", f"unknown node {end!r}")
                )
                dangling = True
        if dangling:
            continue
        key = (edge.kind, edge.parent, edge.child)
        if key in edge_seen:
            found.append(
                Violation(
                    ViolationCode.DUPLICATE_ID,
                    path,
                    f"edge already declared at edges[{edge_seen[key]}]",
                )
            )
        else:
            edge_seen[key] = i
        pk, ck = kinds[edge.parent], kinds[edge.child]
        if edge.kind is EdgeKind.SUPPORTED_BY:
            if pk not in _SUPPORT_PARENTS or ck not in _SUPPORT_CHILDREN:
                found.append(
                    Violation(
                        ViolationCode.ILLEGAL_EDGE,
                        path,
                        f"supported-by cannot connect {pk.value} {edge.parent!r} to {ck.value} {edge.child!r}",
                    )
                )
        else:
            if ck is not NodeKind.CONTEXT or pk not in _SUPPORT_PARENTS:
                found.append(
                    Violation(
                        ViolationCode.ILLEGAL_EDGE,
                        path,
                        f"in-context-of cannot connect {pk.value} {edge.parent!r} to {ck.value} {edge.child!r}",
                    )
                )
            else:
                context_attachments.setdefault(edge.child, []).append(i)

    for ctx, attachment_edges in context_attachments.items():
        if len(attachment_edges) > 1:
            found.append(
                Violation(
                    ViolationCode.ILLEGAL_EDGE,
                    f"edges[{attachment_edges[1]}]",
                    f"context {ctx!r} is attached to more than one claim",
                )
            )

    found.extend(_find_cycles(model, kinds))

    if not any(v.code is ViolationCode.CYCLE_DETECTED for v in found):
        incoming = {e.child for e in model.edges}
        roots = [n.id for n in model.nodes if n.id in kinds and n.id not in incoming]
        roots = list(dict.fromkeys(roots))
        if not roots:
            found.append(Violation(ViolationCode.MULTIPLE_ROOTS, "nodes", "model has no root node"))
        elif len(roots) > 1:
            found.append(
                Violation(
                    ViolationCode.MULTIPLE_ROOTS,
                    "nodes",
                    f"model has {len(roots)} roots: {', '.join(sorted(roots))}",
                )
            )
        elif kinds[roots[0]] is not NodeKind.GOAL:
            found.append(
                Violation(
                    ViolationCode.MULTIPLE_ROOTS,
                    "nodes",
                    f"root {roots[0]!r} is a {kinds[roots[0]].value}; the root must be a goal",
                )
            )
    return found


def _find_cycles(model: ArgumentModel, kinds: Mapping[NodeId, NodeKind]) -> list[Violation]:
    """Report one CycleDetected violation per back edge of the supported-by DAG."""
    adjacency: dict[NodeId, list[NodeId]] = {}
    for edge in model.edges:
        if edge.kind is EdgeKind.SUPPORTED_BY and edge.parent in kinds and edge.child in kinds:
            adjacency.setdefault(edge.parent, []).append(edge.child)

    found: list[Violation] = []
    WHITE, GREY, BLACK = 0, 1, 2
    color = {nid: WHITE for nid in kinds}
    for start in kinds:
        if color.get(start) != WHITE:
            continue
        stack: list[tuple[NodeId, int]] = [(start, 0)]
        path: list[NodeId] = []
        while stack:
            node_id, child_index = stack.pop()
            if child_index == 0:
                color[node_id] = GREY
                path.append(node_id)
            children = adjacency.get(node_id, [])
            advanced = False
            for j in range(child_index, len(children)):
                child = children[j]
                if color[child] == GREY:
                    cycle = path[path.index(child):] + [child]
                    found.append(
                        Violation(
                            ViolationCode.CYCLE_DETECTED,
                            "edges",
                            "support cycle: " + " -> ".join(cycle),
                        )
                    )
                elif color[child] == WHITE:
                    stack.append((node_id, j + 1))
                    stack.append((child, 0))
                    advanced = True
                    break
            if not advanced:
                color[node_id] = BLACK
                path.pop()
    return found


def _validate_semantics(model: ArgumentModel) -> list[Violation]:
    found: list[Violation] = []
    kinds = {n.id: n.kind for n in model.nodes}
    goals = [n.id for n in model.nodes if n.kind is NodeKind.GOAL]
    children_of = {g: support_children(model, g) for g in goals}

    for i, edge in enumerate(model.edges):
        if edge.kind is EdgeKind.SUPPORTED_BY and kinds[edge.child] is NodeKind.STRATEGY:
            if not _flatten_support(model, edge.child, set()):
                found.append(
                    Violation(
                        ViolationCode.ILLEGAL_EDGE,
                        f"edges[{i}]",
                        f"strategy {edge.child!r} contributes no supporting children",
                    )
                )
        if edge.kind is EdgeKind.IN_CONTEXT_OF and kinds[edge.parent] is NodeKind.STRATEGY:
            owners = model._owning_goals(edge.parent)
            if len(owners) > 1:
                found.append(
                    Violation(
                        ViolationCode.ILLEGAL_EDGE,
                        f"edges[{i}]",
                        f"context {edge.child!r} hangs on strategy {edge.parent!r}, which serves "
                        f"several goals ({', '.join(sorted(owners))}); attachment is ambiguous",
                    )
                )

    for goal in goals:
        kids = children_of[goal]
        duplicated = sorted({k for k in kids if kids.count(k) > 1})
        for dup in duplicated:
            found.append(
                Violation(
                    ViolationCode.ILLEGAL_EDGE,
                    "edges",
                    f"node {dup!r} supports goal {goal!r} more than once",
                )
            )
        if not kids and model.contexts_of(goal):
            found.append(
                Violation(
                    ViolationCode.ILLEGAL_EDGE,
                    "edges",
                    f"context attached to undeveloped goal {goal!r} cannot join any inference",
                )
            )

    for owner, spec in model.specs.items():
        path = f"arguments.{owner}"
        if owner not in kinds:
            found.append(Violation(ViolationCode.UNKNOWN_REFERENCE, path, f"unknown goal {owner!r}"))
            continue
        if kinds[owner] is not NodeKind.GOAL:
            found.append(
                Violation(ViolationCode.SPEC_MISMATCH, path, f"spec owner {owner!r} is not a goal")
            )
            continue
        kids = children_of.get(owner, ())
        if not kids:
            found.append(
                Violation(
                    ViolationCode.SPEC_MISMATCH, path, f"goal {owner!r} is undeveloped; spec has nothing to combine"
                )
            )
            continue
        refs: list[NodeId] = []
        _validate_spec_tree(spec, path, kinds, refs, found)
        counts = {r: refs.count(r) for r in refs}
        for ref, count in sorted(counts.items()):
            if ref not in kinds:
                continue  # already reported as UnknownReference
            if count > 1:
                found.append(
                    Violation(ViolationCode.SPEC_MISMATCH, path, f"child {ref!r} appears {count} times in the spec")
                )
            elif ref not in kids:
                found.append(
                    Violation(
                        ViolationCode.SPEC_MISMATCH, path, f"{ref!r} is not a supporting child of {owner!r}"
                    )
                )
        for kid in kids:
            if kid not in counts:
                found.append(
                    Violation(
                        ViolationCode.SPEC_MISMATCH, path, f"spec does not cover supporting child {kid!r}"
                    )
                )

    leaf_ids = leaves(model)
    for key in sorted(model.leaf_confidences):
        value = model.leaf_confidences[key]
        path = f"confidence.{key}"
        if key not in kinds:
            found.append(Violation(ViolationCode.UNKNOWN_REFERENCE, path, f"unknown node {key!r}"))
        elif key not in leaf_ids:
            found.append(
                Violation(
                    ViolationCode.UNEXPECTED_CONFIDENCE,
                    path,
                    f"{key!r} is not a leaf; its confidence is computed, not assigned",
                )
            )
        if not _in_unit(value):
            found.append(
                Violation(ViolationCode.VALUE_OUT_OF_RANGE, path, f"confidence {value!r} is outside [0, 1]")
            )
    for leaf in sorted(leaf_ids):
        if leaf not in model.leaf_confidences:
            found.append(
                Violation(ViolationCode.MISSING_CONFIDENCE, f"confidence.{leaf}", f"leaf {leaf!r} has no confidence")
            )

    for key in sorted(model.context_weights):
        value = model.context_weights[key]
        path = f"context_weights.{key}"
        if key not in kinds:
            found.append(Violation(ViolationCode.UNKNOWN_REFERENCE, path, f"unknown node {key!r}"))
        elif kinds[key] is not NodeKind.CONTEXT:
            found.append(
                Violation(
                    ViolationCode.UNEXPECTED_CONFIDENCE,
                    path,
                    f"{key!r} is not a context; only contexts take context weights",
                )
            )
        if not _in_unit(value):
            found.append(
                Violation(ViolationCode.VALUE_OUT_OF_RANGE, path, f"weight {value!r} is outside [0, 1]")
            )
    return found


def _validate_spec_tree(
    spec: ArgumentSpec,
    path: str,
    kinds: Mapping[NodeId, NodeKind],
    refs: list[NodeId],
    found: list[Violation],
) -> None:
    if spec.leak is not None:
        if spec.kind is not ArgumentKind.COMPLEMENTARY:
            found.append(
                Violation(
                    ViolationCode.SPEC_MISMATCH, f"{path}.leak", "leak applies to complementary arguments only"
                )
            )
        elif not _in_unit(spec.leak):
            found.append(
                Violation(ViolationCode.VALUE_OUT_OF_RANGE, f"{path}.leak", f"leak {spec.leak!r} is outside [0, 1]")
            )
    if not spec.children:
        found.append(Violation(ViolationCode.SPEC_MISMATCH, f"{path}.children", "argument group is empty"))
    for i, child in enumerate(spec.children):
        child_path = f"{path}.children[{i}]"
        if not _in_unit(child.weight):
            found.append(
                Violation(
                    ViolationCode.VALUE_OUT_OF_RANGE,
                    f"{child_path}.weight",
                    f"weight {child.weight!r} is outside [0, 1]",
                )
            )
        if child.ref is not None:
            refs.append(child.ref)
            if child.ref not in kinds:
                found.append(
                    Violation(ViolationCode.UNKNOWN_REFERENCE, f"{child_path}.ref", f"unknown node {child.ref!r}")
                )
        else:
            assert child.group is not None
            _validate_spec_tree(child.group, f"{child_path}.group", kinds, refs, found)
