"""Confidence networks: the belief-network DAG derived from an argument model.

Each derived node owns a combinator describing how confidence flows in
from its parents: a single weighted edge, a noisy-OR over independently
sufficient parents, or a leaky noisy-AND over jointly required ones.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence, Union

from .errors import EmptyWeightsError, ValueOutOfRangeError
from .model import (
    ArgumentKind,
    ArgumentModel,
    ArgumentSpec,
    NodeId,
    NodeKind,
    RESERVED_PREFIX,
    SpecChild,
    leaves,
    support_children,
)


@dataclass(frozen=True)
class Simple:
    """Linear dependency on a single parent: g = weight * g_parent."""

    weight: float


@dataclass(frozen=True)
class NoisyOr:
    """Independently sufficient parents; no residual term."""

    weights: tuple[float, ...]


@dataclass(frozen=True)
class NoisyAnd:
    """Jointly required parents with weighted influence and a leak term.

    ``leak_is_default`` marks a leak derived as the mean of the weights;
    such leaks are recomputed whenever the weights change.
    """

    weights: tuple[float, ...]
    leak: float
    leak_is_default: bool


Combinator = Union[Simple, NoisyOr, NoisyAnd]


class Origin(Enum):
    LEAF = "leaf"
    DERIVED = "derived"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class ConfidenceNode:
    """One node of the confidence network.

    ``source`` names the argument-model element the node came from; it is
    None for generated intermediate nodes.
    """

    id: NodeId
    origin: Origin
    source: Optional[NodeId]
    parents: tuple[NodeId, ...] = ()
    combinator: Optional[Combinator] = None

    @property
    def is_leaf(self) -> bool:
        return self.origin is Origin.LEAF


@dataclass(frozen=True)
class ConfidenceNetwork:
    """A feed-forward DAG of confidence nodes with a unique root."""

    nodes: Mapping[NodeId, ConfidenceNode]
    root: NodeId

    def node(self, node_id: NodeId) -> ConfidenceNode:
        return self.nodes[node_id]

    @property
    def leaf_ids(self) -> frozenset[NodeId]:
        return frozenset(n.id for n in self.nodes.values() if n.is_leaf)


def default_leak(weights: Sequence[float]) -> float:
    """The derived leak of a noisy-AND: the arithmetic mean of its weights."""
    if not weights:
        raise EmptyWeightsError("cannot derive a leak from an empty weight list")
    for w in weights:
        if not 0.0 <= w <= 1.0:
            raise ValueOutOfRangeError(f"weight {w!r} is outside [0, 1]")
    return sum(weights) / len(weights)


def transform(model: ArgumentModel) -> ConfidenceNetwork:
    """Turn a validated argument model into its confidence network.

    Goals become derived nodes, solutions/contexts/undeveloped goals become
    leaves, and strategies vanish. Contexts join their goal's parent set
    inside a noisy-AND; when the goal's own argument is alternative, the
    alternative children are grouped under a generated intermediate node
    first. Nested spec groups produce intermediate nodes recursively.

    Deterministic: equal models yield identical networks, including
    generated ids and orderings.
    """
    leaf_ids = leaves(model)
    nodes: dict[NodeId, ConfidenceNode] = {}
    for n in model.nodes:
        if n.id in leaf_ids:
            nodes[n.id] = ConfidenceNode(id=n.id, origin=Origin.LEAF, source=n.id)

    for n in model.nodes:
        if n.kind is not NodeKind.GOAL or n.id in leaf_ids:
            continue
        children = support_children(model, n.id)
        contexts = model.contexts_of(n.id)
        spec = model.specs.get(n.id) or ArgumentSpec(
            kind=ArgumentKind.COMPLEMENTARY,
            children=tuple(SpecChild(ref=c, weight=1.0) for c in children),
        )
        entries = _resolve_entries(spec.children, nodes)
        parents, combinator = _goal_combinator(spec, entries, contexts, model, nodes)
        nodes[n.id] = ConfidenceNode(
            id=n.id,
            origin=Origin.DERIVED,
            source=n.id,
            parents=parents,
            combinator=combinator,
        )
    return ConfidenceNetwork(nodes=nodes, root=model.root)


def _resolve_entries(
    children: Sequence[SpecChild], nodes: dict[NodeId, ConfidenceNode]
) -> list[tuple[NodeId, float]]:
    """Flatten one spec level into (parent id, weight) pairs.

    Nested groups are materialized as intermediate nodes before their
    consumers, so insertion order is already topological.
    """
    entries: list[tuple[NodeId, float]] = []
    for child in children:
        if child.ref is not None:
            entries.append((child.ref, child.weight))
            continue
        assert child.group is not None
        member_entries = _resolve_entries(child.group.children, nodes)
        group_id = _intermediate(member_entries, child.group, nodes)
        entries.append((group_id, child.weight))
    return entries


def _intermediate(
    entries: Sequence[tuple[NodeId, float]],
    spec: ArgumentSpec,
    nodes: dict[NodeId, ConfidenceNode],
) -> NodeId:
    parents = tuple(nid for nid, _ in entries)
    weights = tuple(w for _, w in entries)
    node_id = _fresh_id(parents, nodes)
    nodes[node_id] = ConfidenceNode(
        id=node_id,
        origin=Origin.INTERMEDIATE,
        source=None,
        parents=parents,
        combinator=_group_combinator(spec, weights),
    )
    return node_id


def _fresh_id(parents: Sequence[NodeId], nodes: Mapping[NodeId, ConfidenceNode]) -> NodeId:
    # User ids cannot start with the reserved prefix, so only generated ids
    # can collide (e.g. joining "B_C" + "D" vs "B" + "C_D").
    base = RESERVED_PREFIX + "_".join(parents)
    candidate = base
    suffix = 2
    while candidate in nodes:
        candidate = f"{base}_{suffix}"
        suffix += 1
    return candidate


def _group_combinator(spec: ArgumentSpec, weights: tuple[float, ...]) -> Combinator:
    if spec.kind is ArgumentKind.ALTERNATIVE:
        return NoisyOr(weights=weights)
    if spec.leak is not None:
        return NoisyAnd(weights=weights, leak=spec.leak, leak_is_default=False)
    return NoisyAnd(weights=weights, leak=default_leak(weights), leak_is_default=True)


def _goal_combinator(
    spec: ArgumentSpec,
    entries: list[tuple[NodeId, float]],
    contexts: tuple[NodeId, ...],
    model: ArgumentModel,
    nodes: dict[NodeId, ConfidenceNode],
) -> tuple[tuple[NodeId, ...], Combinator]:
    if not contexts:
        if len(entries) == 1 and entries[0][0] in model.by_id:
            # single supporting child, no context: plain weighted edge
            return (entries[0][0],), Simple(weight=entries[0][1])
        parents = tuple(nid for nid, _ in entries)
        return parents, _group_combinator(spec, tuple(w for _, w in entries))

    context_entries = [(c, model.context_weights.get(c, 1.0)) for c in contexts]
    if spec.kind is ArgumentKind.ALTERNATIVE and len(entries) > 1:
        group_id = _intermediate(entries, spec, nodes)
        entries = [(group_id, 1.0)]
    combined = entries + context_entries
    parents = tuple(nid for nid, _ in combined)
    weights = tuple(w for _, w in combined)
    if spec.kind is ArgumentKind.COMPLEMENTARY and spec.leak is not None:
        return parents, NoisyAnd(weights=weights, leak=spec.leak, leak_is_default=False)
    return parents, NoisyAnd(weights=weights, leak=default_leak(weights), leak_is_default=True)


def topological_order(network: ConfidenceNetwork) -> tuple[NodeId, ...]:
    """Parents-first order, deterministic: ties broken by id, lexicographic."""
    remaining: dict[NodeId, int] = {nid: len(n.parents) for nid, n in network.nodes.items()}
    consumers: dict[NodeId, list[NodeId]] = {nid: [] for nid in network.nodes}
    for node in network.nodes.values():
        for parent in node.parents:
            consumers[parent].append(node.id)
    ready = [nid for nid, degree in remaining.items() if degree == 0]
    heapq.heapify(ready)
    order: list[NodeId] = []
    while ready:
        nid = heapq.heappop(ready)
        order.append(nid)
        for consumer in consumers[nid]:
            remaining[consumer] -= 1
            if remaining[consumer] == 0:
                heapq.heappush(ready, consumer)
    return tuple(order)
