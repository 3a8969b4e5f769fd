"""Confidence propagation through a network, plus an enumeration oracle.

Confidence g(A) is the belief mass committed to claim A; the remainder
1 - g(A) is uncommitted uncertainty, and no mass is ever placed on the
negation. Each combinator is the expectation of its conditional table
over independent Bernoulli parents with parameter g_i:

    simple      g = p * g_B
    noisy-OR    g = 1 - prod_i (1 - p_i * g_i)
    noisy-AND   g = v * [prod_i (1 - p_i*(1-g_i)) - prod_i ((1-p_i)*(1-g_i))]

The noisy-AND subtracts the all-parents-false term so that zero
confidence in every parent yields zero, whatever the weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    IncompleteAssessmentError,
    InternalConsistencyError,
    LengthMismatchError,
    TooManyParentsError,
    UnknownLeafError,
    UnknownVariableError,
    ValueOutOfRangeError,
)
from .model import NodeId
from .network import (
    Combinator,
    ConfidenceNetwork,
    NoisyAnd,
    NoisyOr,
    Simple,
    default_leak,
    topological_order,
)

MAX_ORACLE_PARENTS = 20

# Representation error is absorbed up to this bound; anything larger is a bug.
_CLAMP_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Assessment:
    """A total assignment of confidence to every network leaf."""

    values: Mapping[NodeId, float]

    def __getitem__(self, node_id: NodeId) -> float:
        return self.values[node_id]


@dataclass(frozen=True)
class Overrides:
    """Transient patches applied during one propagation.

    Keys: leaf ids for confidences, (node id, parent index) for weights,
    node ids for explicit noisy-AND leaks. The network itself is never
    mutated.
    """

    confidences: Mapping[NodeId, float] = field(default_factory=dict)
    weights: Mapping[tuple[NodeId, int], float] = field(default_factory=dict)
    leaks: Mapping[NodeId, float] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.confidences) or bool(self.weights) or bool(self.leaks)

    @classmethod
    def from_flat(cls, flat: Mapping[str, float]) -> "Overrides":
        """Parse the flat override syntax: ``ID``, ``w:NODE:IDX``, ``v:NODE``."""
        confidences: dict[NodeId, float] = {}
        weights: dict[tuple[NodeId, int], float] = {}
        leaks: dict[NodeId, float] = {}
        for key, value in flat.items():
            if key.startswith("w:"):
                parts = key.split(":")
                if len(parts) != 3 or not parts[2].isdigit():
                    raise UnknownVariableError(f"malformed weight override key {key!r}")
                weights[(parts[1], int(parts[2]))] = value
            elif key.startswith("v:"):
                leaks[key[2:]] = value
            else:
                confidences[key] = value
        return cls(confidences=confidences, weights=weights, leaks=leaks)


@dataclass(frozen=True)
class PropagationResult:
    """Computed confidence for every network node, leaves included."""

    values: Mapping[NodeId, float]
    root: NodeId

    @property
    def root_confidence(self) -> float:
        return self.values[self.root]

    def __getitem__(self, node_id: NodeId) -> float:
        return self.values[node_id]


def _check_unit(name: str, value: float) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not 0.0 <= value <= 1.0:
        raise ValueOutOfRangeError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)


def _check_lists(weights: Sequence[float], confidences: Sequence[float]) -> None:
    if len(weights) == 0:
        raise LengthMismatchError("weight list is empty")
    if len(weights) != len(confidences):
        raise LengthMismatchError(
            f"{len(weights)} weights vs {len(confidences)} confidences"
        )
    for i, w in enumerate(weights):
        _check_unit(f"weights[{i}]", w)
    for i, g in enumerate(confidences):
        _check_unit(f"confidences[{i}]", g)


def _clamp(value: float) -> float:
    if 0.0 <= value <= 1.0:
        return value
    if -_CLAMP_TOLERANCE <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + _CLAMP_TOLERANCE:
        return 1.0
    raise InternalConsistencyError(f"computed confidence {value!r} is outside [0, 1]")


def eval_simple(p: float, g: float) -> float:
    """Confidence through a single weighted inference: p * g."""
    return _clamp(_check_unit("p", p) * _check_unit("g", g))


def eval_noisy_or(weights: Sequence[float], confidences: Sequence[float]) -> float:
    """Noisy-OR over independently sufficient parents, no residual term."""
    _check_lists(weights, confidences)
    acc = 1.0
    for p, g in zip(weights, confidences):
        acc *= 1.0 - p * g
    return _clamp(1.0 - acc)


def eval_noisy_and(weights: Sequence[float], leak: float, confidences: Sequence[float]) -> float:
    """Weighted noisy-AND with leak ``v``; zero when every parent is at zero."""
    _check_lists(weights, confidences)
    v = _check_unit("leak", leak)
    kept = 1.0
    all_false = 1.0
    for p, g in zip(weights, confidences):
        kept *= 1.0 - p * (1.0 - g)
        all_false *= (1.0 - p) * (1.0 - g)
    return _clamp(v * (kept - all_false))


def _table_entry(combinator: Combinator, true_set: Sequence[bool]) -> float:
    """Conditional-table entry for one parent truth assignment."""
    if isinstance(combinator, Simple):
        return combinator.weight if true_set[0] else 0.0
    if isinstance(combinator, NoisyOr):
        acc = 1.0
        for p, is_true in zip(combinator.weights, true_set):
            if is_true:
                acc *= 1.0 - p
        return 1.0 - acc
    if not any(true_set):
        return 0.0
    acc = combinator.leak
    for p, is_true in zip(combinator.weights, true_set):
        if not is_true:
            acc *= 1.0 - p
    return acc


def cpt_oracle(combinator: Combinator, confidences: Sequence[float]) -> float:
    """Exhaustive expectation of the combinator's conditional table.

    Enumerates all 2^n parent truth assignments, weighting each by the
    product of independent Bernoulli(g_i) probabilities. Slow by design;
    this is the reference the closed forms are checked against.
    """
    if isinstance(combinator, Simple):
        weights: Sequence[float] = (combinator.weight,)
    else:
        weights = combinator.weights
    _check_lists(weights, confidences)
    if isinstance(combinator, NoisyAnd):
        _check_unit("leak", combinator.leak)
    n = len(confidences)
    if n > MAX_ORACLE_PARENTS:
        raise TooManyParentsError(f"{n} parents would need 2^{n} table rows")
    total = 0.0
    for assignment in product((False, True), repeat=n):
        mass = 1.0
        for g, is_true in zip(confidences, assignment):
            mass *= g if is_true else 1.0 - g
        if mass:
            total += mass * _table_entry(combinator, assignment)
    return _clamp(total)


def _effective(
    node_id: NodeId, combinator: Combinator, overrides: Overrides
) -> tuple[tuple[float, ...], Optional[float]]:
    """Apply weight/leak overrides; returns (weights, leak or None)."""
    if isinstance(combinator, Simple):
        base: tuple[float, ...] = (combinator.weight,)
    else:
        base = combinator.weights
    weights = tuple(
        overrides.weights.get((node_id, i), w) for i, w in enumerate(base)
    )
    if isinstance(combinator, NoisyAnd):
        if node_id in overrides.leaks:
            return weights, overrides.leaks[node_id]
        if combinator.leak_is_default:
            return weights, default_leak(weights)
        return weights, combinator.leak
    return weights, None


def _check_overrides(network: ConfidenceNetwork, overrides: Overrides) -> None:
    leaf_ids = network.leaf_ids
    bad_leaves = [k for k in overrides.confidences if k not in leaf_ids]
    if bad_leaves:
        raise UnknownLeafError(bad_leaves)
    for key, value in overrides.confidences.items():
        _check_unit(f"override {key}", value)
    for (node_id, index), value in overrides.weights.items():
        node = network.nodes.get(node_id)
        if node is None or node.combinator is None:
            raise UnknownVariableError(f"{node_id!r} has no weights to override")
        arity = 1 if isinstance(node.combinator, Simple) else len(node.combinator.weights)
        if not 0 <= index < arity:
            raise UnknownVariableError(f"{node_id!r} has no weight index {index}")
        _check_unit(f"override w:{node_id}:{index}", value)
    for node_id, value in overrides.leaks.items():
        node = network.nodes.get(node_id)
        if node is None or not isinstance(node.combinator, NoisyAnd):
            raise UnknownVariableError(f"{node_id!r} has no leak to override")
        if node.combinator.leak_is_default:
            raise UnknownVariableError(
                f"the leak of {node_id!r} is derived from its weights; override a weight instead"
            )
        _check_unit(f"override v:{node_id}", value)


def propagate(
    network: ConfidenceNetwork,
    assessment: Union[Assessment, Mapping[NodeId, float]],
    overrides: Optional[Overrides] = None,
) -> PropagationResult:
    """Evaluate every node in one topological pass.

    The assessment must cover exactly the network's leaves. Overrides are
    transient; neither the network nor the assessment is modified. Pure:
    identical inputs give bit-identical results.
    """
    leaf_values = assessment.values if isinstance(assessment, Assessment) else assessment
    leaf_ids = network.leaf_ids
    missing = leaf_ids - leaf_values.keys()
    if missing:
        raise IncompleteAssessmentError(missing)
    extra = leaf_values.keys() - leaf_ids
    if extra:
        raise UnknownLeafError(extra)
    overrides = overrides or Overrides()
    if overrides:
        _check_overrides(network, overrides)

    values: dict[NodeId, float] = {}
    for node_id in topological_order(network):
        node = network.nodes[node_id]
        if node.is_leaf:
            g = overrides.confidences.get(node_id, leaf_values[node_id])
            values[node_id] = _check_unit(f"confidence of {node_id}", g)
            continue
        assert node.combinator is not None
        weights, leak = _effective(node_id, node.combinator, overrides)
        parent_gs = [values[p] for p in node.parents]
        if isinstance(node.combinator, Simple):
            values[node_id] = eval_simple(weights[0], parent_gs[0])
        elif isinstance(node.combinator, NoisyOr):
            values[node_id] = eval_noisy_or(weights, parent_gs)
        else:
            assert leak is not None
            values[node_id] = eval_noisy_and(weights, leak, parent_gs)
    return PropagationResult(values=values, root=network.root)
