"""Error and violation types shared across the argus toolchain."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class ArgusError(Exception):
    """Base class for every error raised by argus."""


class ViolationCode(str, enum.Enum):
    """Machine-readable classification of a model validation finding."""

    INVALID_ID = "InvalidId"
    DUPLICATE_ID = "DuplicateId"
    UNKNOWN_REFERENCE = "UnknownReference"
    ILLEGAL_EDGE = "IllegalEdge"
    CYCLE_DETECTED = "CycleDetected"
    MULTIPLE_ROOTS = "MultipleRoots"
    VALUE_OUT_OF_RANGE = "ValueOutOfRange"
    MISSING_CONFIDENCE = "MissingConfidence"
    UNEXPECTED_CONFIDENCE = "UnexpectedConfidence"
    SPEC_MISMATCH = "SpecMismatch"


@dataclass(frozen=True)
class Violation:
    """One structural problem found while validating an argument model.

    ``path`` locates the offending construct in document coordinates,
    e.g. ``edges[3].child`` or ``confidence.Sn1``.
    """

    code: ViolationCode
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.code.value} at {self.path}: {self.message}"


class ModelValidationError(ArgusError):
    """A model failed validation. Carries every violation found, not just the first."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations: list[Violation] = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(
            f"model validation failed with {len(self.violations)} violation(s):\n{lines}"
        )


class UnknownReferenceError(ArgusError):
    """An operation was asked about a node id that does not resolve."""


class DocumentSyntaxError(ArgusError):
    """The document text is not well-formed YAML/JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")


class SchemaError(ArgusError):
    """The document tree does not match the model-document schema.

    ``errors`` is a list of ``(path, message)`` pairs, one per finding.
    """

    def __init__(self, errors: Sequence[tuple[str, str]]):
        self.errors = list(errors)
        lines = "\n".join(f"  - {path}: {message}" for path, message in self.errors)
        super().__init__(f"schema validation failed with {len(self.errors)} error(s):\n{lines}")


class EvaluationError(ArgusError):
    """Base class for confidence evaluation errors."""


class ValueOutOfRangeError(EvaluationError):
    """A confidence, weight, or leak lies outside [0, 1]."""


class LengthMismatchError(EvaluationError):
    """Weight and confidence lists disagree in length, or a list is empty."""


class EmptyWeightsError(EvaluationError):
    """A leak was requested for an empty weight list."""


class TooManyParentsError(EvaluationError):
    """The enumeration oracle was asked to expand more parents than it can afford."""


class IncompleteAssessmentError(EvaluationError):
    """The assessment misses confidence values for some leaves."""

    def __init__(self, missing: Iterable[str]):
        self.missing = sorted(missing)
        super().__init__(f"assessment is missing leaf confidences for: {', '.join(self.missing)}")


class UnknownLeafError(EvaluationError):
    """The assessment (or an override) names ids that are not network leaves."""

    def __init__(self, extra: Iterable[str]):
        self.extra = sorted(extra)
        super().__init__(f"not leaves of the network: {', '.join(self.extra)}")


class UnknownVariableError(EvaluationError):
    """A sensitivity variable or override does not resolve in the network."""


class UnknownTargetError(EvaluationError):
    """The requested sensitivity target is not a network node."""


class InternalConsistencyError(ArgusError):
    """A computed confidence drifted outside [0, 1] by more than representation error."""
