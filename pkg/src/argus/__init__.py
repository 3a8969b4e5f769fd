"""Confidence estimation and weak-point analysis for GSN safety cases.

Pipeline: parse or build an :class:`ArgumentModel`, :func:`transform` it
into a :class:`ConfidenceNetwork`, :func:`propagate` a leaf
:class:`Assessment` through it, and rank weaknesses with :func:`tornado`.
"""

from .errors import (
    ArgusError,
    DocumentSyntaxError,
    ModelValidationError,
    SchemaError,
    Violation,
    ViolationCode,
)
from .formats import export_dot, parse_model, serialize_model
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
    leaves,
    support_children,
)
from .network import (
    Combinator,
    ConfidenceNetwork,
    ConfidenceNode,
    NoisyAnd,
    NoisyOr,
    Origin,
    Simple,
    default_leak,
    topological_order,
    transform,
)
from .propagation import (
    Assessment,
    Overrides,
    PropagationResult,
    cpt_oracle,
    eval_noisy_and,
    eval_noisy_or,
    eval_simple,
    propagate,
)
from .sensitivity import (
    SensitivityVariable,
    TornadoEntry,
    TornadoReport,
    VariableKind,
    list_variables,
    rank_weak_points,
    resolve_variable,
    tornado,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentEdge",
    "ArgumentKind",
    "ArgumentModel",
    "ArgumentNode",
    "ArgumentSpec",
    "ArgusError",
    "Assessment",
    "Combinator",
    "ConfidenceNetwork",
    "ConfidenceNode",
    "DocumentSyntaxError",
    "EdgeKind",
    "ModelValidationError",
    "NodeKind",
    "NoisyAnd",
    "NoisyOr",
    "Origin",
    "Overrides",
    "PropagationResult",
    "SchemaError",
    "SensitivityVariable",
    "Simple",
    "SpecChild",
    "TornadoEntry",
    "TornadoReport",
    "VariableKind",
    "Violation",
    "ViolationCode",
    "build_model",
    "cpt_oracle",
    "default_leak",
    "eval_noisy_and",
    "eval_noisy_or",
    "eval_simple",
    "export_dot",
    "leaves",
    "list_variables",
    "parse_model",
    "propagate",
    "rank_weak_points",
    "resolve_variable",
    "serialize_model",
    "support_children",
    "topological_order",
    "tornado",
    "transform",
]
