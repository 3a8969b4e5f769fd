"""Tornado analysis: one-at-a-time excursions of confidences and weights.

Each variable is swung to 0 and to 1 with everything else at baseline,
the target is re-propagated, and the resulting intervals are ranked by
width to surface the argument's weak points.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional, Union

from .errors import UnknownTargetError, UnknownVariableError
from .model import NodeId
from .network import ConfidenceNetwork, NoisyAnd
from .propagation import Assessment, Overrides, propagate

X_MIN = 0.0
X_MAX = 1.0


class VariableKind(Enum):
    LEAF_CONFIDENCE = "leaf_confidence"
    WEIGHT = "weight"
    LEAK = "leak"


@dataclass(frozen=True)
class SensitivityVariable:
    """One swingable quantity: a leaf confidence, a parent weight, or a leak."""

    kind: VariableKind
    node: NodeId
    index: Optional[int] = None  # parent index, weights only
    label: str = ""

    @property
    def key(self) -> str:
        """Flat override key: ``ID``, ``w:NODE:IDX``, or ``v:NODE``."""
        if self.kind is VariableKind.LEAF_CONFIDENCE:
            return self.node
        if self.kind is VariableKind.WEIGHT:
            return f"w:{self.node}:{self.index}"
        return f"v:{self.node}"

    def as_overrides(self, value: float) -> Overrides:
        if self.kind is VariableKind.LEAF_CONFIDENCE:
            return Overrides(confidences={self.node: value})
        if self.kind is VariableKind.WEIGHT:
            assert self.index is not None
            return Overrides(weights={(self.node, self.index): value})
        return Overrides(leaks={self.node: value})


@dataclass(frozen=True)
class TornadoEntry:
    """Target interval produced by swinging one variable across [0, 1]."""

    variable: SensitivityVariable
    baseline_target: float
    value_at_min: float  # target with the variable at 0
    value_at_max: float  # target with the variable at 1

    @property
    def width(self) -> float:
        return abs(self.value_at_max - self.value_at_min)

    @property
    def interval(self) -> tuple[float, float]:
        return (min(self.value_at_min, self.value_at_max), max(self.value_at_min, self.value_at_max))

    @property
    def increases_at(self) -> str:
        """Which endpoint raises the target: 'max', 'min', or 'none'."""
        if self.value_at_max > self.value_at_min:
            return "max"
        if self.value_at_max < self.value_at_min:
            return "min"
        return "none"


@dataclass(frozen=True)
class TornadoReport:
    """Entries sorted by width descending, ties by label ascending."""

    target: NodeId
    baseline: Mapping[NodeId, float]  # assessment snapshot
    baseline_target: float
    entries: tuple[TornadoEntry, ...]


def list_variables(network: ConfidenceNetwork) -> tuple[SensitivityVariable, ...]:
    """Every swingable variable of the network, in deterministic order.

    Leaf confidences first, then weights, then explicit leaks; each block
    sorted by node id (weights also by parent index). A default-derived
    leak is not a variable: it follows the weights.
    """
    variables: list[SensitivityVariable] = []
    for node_id in sorted(network.leaf_ids):
        variables.append(
            SensitivityVariable(VariableKind.LEAF_CONFIDENCE, node_id, label=f"g({node_id})")
        )
    for node_id in sorted(network.nodes):
        node = network.nodes[node_id]
        if node.combinator is None:
            continue
        for i, parent in enumerate(node.parents):
            variables.append(
                SensitivityVariable(
                    VariableKind.WEIGHT, node_id, index=i, label=f"w({node_id}<-{parent})"
                )
            )
    for node_id in sorted(network.nodes):
        node = network.nodes[node_id]
        if isinstance(node.combinator, NoisyAnd) and not node.combinator.leak_is_default:
            variables.append(SensitivityVariable(VariableKind.LEAK, node_id, label=f"v({node_id})"))
    return tuple(variables)


def resolve_variable(network: ConfidenceNetwork, key: str) -> SensitivityVariable:
    """Turn a flat key (``ID``, ``w:NODE:IDX``, ``v:NODE``) into a variable."""
    for variable in list_variables(network):
        if variable.key == key:
            return variable
    raise UnknownVariableError(f"{key!r} does not name a sensitivity variable of this network")


def tornado(
    network: ConfidenceNetwork,
    assessment: Union[Assessment, Mapping[NodeId, float]],
    target: NodeId,
    variables: Optional[Iterable[SensitivityVariable]] = None,
) -> TornadoReport:
    """Swing each variable to 0 and 1 and collect the target intervals.

    Performs exactly 2 * len(variables) + 1 propagations. Weight swings on
    a default-leak noisy-AND recompute the leak from the patched weights.
    """
    if target not in network.nodes:
        raise UnknownTargetError(f"{target!r} is not a node of the network")
    if variables is None:
        selected = list_variables(network)
    else:
        selected = tuple(variables)
        known = set(list_variables(network))
        for variable in selected:
            if variable not in known:
                raise UnknownVariableError(
                    f"{variable.key!r} does not name a sensitivity variable of this network"
                )
    baseline_values = assessment.values if isinstance(assessment, Assessment) else assessment
    baseline = propagate(network, baseline_values)
    baseline_target = baseline.values[target]

    entries = []
    for variable in selected:
        at_min = propagate(network, baseline_values, variable.as_overrides(X_MIN)).values[target]
        at_max = propagate(network, baseline_values, variable.as_overrides(X_MAX)).values[target]
        entries.append(
            TornadoEntry(
                variable=variable,
                baseline_target=baseline_target,
                value_at_min=at_min,
                value_at_max=at_max,
            )
        )
    entries.sort(key=lambda e: (-e.width, e.variable.label))
    return TornadoReport(
        target=target,
        baseline=dict(baseline_values),
        baseline_target=baseline_target,
        entries=tuple(entries),
    )


def rank_weak_points(report: TornadoReport, top_k: int) -> list[SensitivityVariable]:
    """The ``top_k`` most influential variables; k is clipped to the entry count."""
    if top_k <= 0:
        return []
    return [entry.variable for entry in report.entries[:top_k]]
