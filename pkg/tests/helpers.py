"""Shared test utilities: deterministic generators for networks and models."""

from __future__ import annotations

import random

from argus import (
    ArgumentEdge,
    ArgumentKind,
    ArgumentModel,
    ArgumentNode,
    ArgumentSpec,
    EdgeKind,
    NodeKind,
    SpecChild,
    build_model,
    default_leak,
)
from argus.network import ConfidenceNetwork, ConfidenceNode, NoisyAnd, NoisyOr, Origin, Simple


def random_combinator(rng: random.Random, arity: int):
    choices = ["or", "and"] if arity > 1 else ["simple", "or", "and"]
    kind = rng.choice(choices)
    weights = tuple(rng.random() for _ in range(arity))
    if kind == "simple":
        return Simple(weight=weights[0])
    if kind == "or":
        return NoisyOr(weights=weights)
    if rng.random() < 0.5:
        return NoisyAnd(weights=weights, leak=default_leak(weights), leak_is_default=True)
    return NoisyAnd(weights=weights, leak=rng.random(), leak_is_default=False)


def random_network(rng: random.Random, max_nodes: int = 30) -> ConfidenceNetwork:
    """A random valid confidence network: DAG, unique root, all nodes feed it."""
    n = rng.randint(2, max_nodes)
    ids = [f"n{i:02d}" for i in range(n)]
    nodes: dict[str, ConfidenceNode] = {}
    dangling: list[str] = []  # nodes nothing consumes yet
    for i, nid in enumerate(ids):
        is_root = i == n - 1
        if i == 0 or (not is_root and rng.random() < 0.35):
            nodes[nid] = ConfidenceNode(id=nid, origin=Origin.LEAF, source=nid)
            dangling.append(nid)
            continue
        if is_root:
            parents = list(dangling)
        else:
            parents = rng.sample(ids[:i], rng.randint(1, min(4, i)))
            for p in parents:
                if p in dangling:
                    dangling.remove(p)
            dangling.append(nid)
        nodes[nid] = ConfidenceNode(
            id=nid,
            origin=Origin.DERIVED,
            source=nid,
            parents=tuple(parents),
            combinator=random_combinator(rng, len(parents)),
        )
    return ConfidenceNetwork(nodes=nodes, root=ids[-1])


def random_assessment(rng: random.Random, network: ConfidenceNetwork) -> dict[str, float]:
    return {leaf: rng.random() for leaf in sorted(network.leaf_ids)}


def scale_model(groups: int = 8, solutions_per_group: int = 7, alternatives: int = 2) -> ArgumentModel:
    """A synthetic case study: one root claim over ``groups`` sub-claims, each
    backed by ``solutions_per_group`` evidence items. The first
    ``alternatives`` sub-claims argue alternatively, the rest complementarily.
    Default sizes give a 65-node confidence network.
    """
    rng = random.Random(65)
    nodes = [ArgumentNode("G0", NodeKind.GOAL, "Top-level claim")]
    edges = []
    specs: dict[str, ArgumentSpec] = {}
    confidences: dict[str, float] = {}
    sub_goals = []
    for i in range(groups):
        gid = f"G{i + 1}"
        nodes.append(ArgumentNode(gid, NodeKind.GOAL, f"Sub-claim {i + 1}"))
        edges.append(ArgumentEdge(EdgeKind.SUPPORTED_BY, "G0", gid))
        sub_goals.append(gid)
        children = []
        for j in range(solutions_per_group):
            sid = f"Sn{i + 1}_{j + 1}"
            nodes.append(ArgumentNode(sid, NodeKind.SOLUTION, f"Evidence item {i + 1}.{j + 1}"))
            edges.append(ArgumentEdge(EdgeKind.SUPPORTED_BY, gid, sid))
            confidences[sid] = round(0.5 + 0.5 * rng.random(), 3)
            children.append(SpecChild(ref=sid, weight=round(0.6 + 0.4 * rng.random(), 3)))
        kind = ArgumentKind.ALTERNATIVE if i < alternatives else ArgumentKind.COMPLEMENTARY
        specs[gid] = ArgumentSpec(kind=kind, children=tuple(children))
    specs["G0"] = ArgumentSpec(
        kind=ArgumentKind.COMPLEMENTARY,
        children=tuple(SpecChild(ref=g, weight=1.0) for g in sub_goals),
    )
    return build_model(nodes, edges, specs, confidences)
