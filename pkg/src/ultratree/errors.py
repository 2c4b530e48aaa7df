"""Domain errors with stable machine-readable codes.

Every error carries a ``code`` string used by the CLI to emit structured
diagnostics instead of stack traces.
"""

from __future__ import annotations


class UltratreeError(Exception):
    """Base class for all domain errors."""

    code = "domain-error"


class ParseError(UltratreeError):
    code = "parse-error"


class VertexNotFoundError(UltratreeError):
    code = "vertex-not-found"


class NonPositiveWeightError(UltratreeError):
    code = "non-strictly-positive-weight"


class DisconnectedGraphError(UltratreeError):
    code = "disconnected-graph"


class BadMatrixError(UltratreeError):
    code = "asymmetric-or-nonzero-diagonal"


class EmptySetError(UltratreeError):
    code = "empty-set"


class TooFewPointsError(UltratreeError):
    code = "too-few-points"


class NotCompleteMultipartiteError(UltratreeError):
    code = "not-complete-multipartite"


class NotUltrametricError(UltratreeError):
    code = "not-ultrametric"


class MissingPayloadError(UltratreeError):
    code = "missing-payload-for-flavor"


class SizeLimitError(UltratreeError):
    code = "size-limit-exceeded"


class SingleVertexTreeError(UltratreeError):
    code = "single-vertex-tree"


class NotMonotoneError(UltratreeError):
    code = "not-monotone"


class NotEquidistantError(UltratreeError):
    code = "not-equidistant"


class PathTreeError(UltratreeError):
    code = "path-tree"


class AcyclicInputError(UltratreeError):
    code = "acyclic-input"


class NotPlantedError(UltratreeError):
    code = "not-planted"


class NoBranchingVertexError(UltratreeError):
    code = "no-branching-vertex"
