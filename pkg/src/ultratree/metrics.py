"""Tree- and graph-generated distance functions, all with exact arithmetic.

Four constructions: path-weight sums on trees (additive), their shortest-path
extension to graphs, max-vertex-label along tree paths, and its minimax
extension to graphs.  Plus classification of raw matrices and the Hausdorff
distance between subsets.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    BadMatrixError,
    DisconnectedGraphError,
    EmptySetError,
    NonPositiveWeightError,
    VertexNotFoundError,
)
from .graphs import Edge, Graph, Tree, Vertex, edge_key

WeightMap = Mapping[Edge, Fraction]
LabelMap = Mapping[Vertex, Fraction]

ZERO = Fraction(0)


class MetricClass(enum.Enum):
    NOT_SEMIMETRIC = "NotSemimetric"
    METRIC_ONLY = "MetricOnly"
    ULTRAMETRIC = "Ultrametric"
    PSEUDO_ULTRAMETRIC = "PseudoUltrametric"


def normalize_weights(g: Graph, w: Mapping, strict: bool = True) -> dict[Edge, Fraction]:
    """Check a weight map is total on E(g) and (optionally) strictly positive."""
    out: dict[Edge, Fraction] = {}
    for raw_key, raw_val in w.items():
        u, v = raw_key
        key = edge_key(u, v)
        out[key] = Fraction(raw_val)
    for e in g.edges:
        if e not in out:
            raise NonPositiveWeightError(f"missing weight for edge {e!r}")
        if out[e] < 0 or (strict and out[e] == 0):
            raise NonPositiveWeightError(f"weight {out[e]} on edge {e!r}")
    return {e: out[e] for e in g.edges}


def normalize_labels(g: Graph, l: Mapping) -> dict[Vertex, Fraction]:
    """Check a label map is total on V(g) and nonnegative."""
    out = {v: Fraction(val) for v, val in l.items()}
    for v in g.vertices:
        if v not in out:
            raise ValueError(f"missing label for vertex {v!r}")
        if out[v] < 0:
            raise ValueError(f"negative label {out[v]} on vertex {v!r}")
    return {v: out[v] for v in g.vertices}


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Point set with an exact symmetric zero-diagonal distance matrix.

    Positivity off the diagonal is not enforced here; pseudoultrametrics use
    the same type and are told apart by classify().
    """

    points: tuple[Vertex, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, points: Iterable[Vertex], rows: Sequence[Sequence[Fraction]]):
        pts = tuple(points)
        if len(set(pts)) != len(pts) or not pts:
            raise ValueError("points must be nonempty and unique")
        n = len(pts)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise BadMatrixError(f"matrix must be {n}x{n}")
        mat = [[Fraction(x) for x in r] for r in rows]
        for i in range(n):
            if mat[i][i] != 0:
                raise BadMatrixError(f"nonzero diagonal at {pts[i]!r}")
            for j in range(i + 1, n):
                if mat[i][j] != mat[j][i]:
                    raise BadMatrixError(f"asymmetric at ({pts[i]!r}, {pts[j]!r})")
                if mat[i][j] < 0:
                    raise ValueError(f"negative distance at ({pts[i]!r}, {pts[j]!r})")
        order = sorted(range(n), key=lambda i: pts[i])
        sorted_pts = tuple(pts[i] for i in order)
        sorted_rows = tuple(tuple(mat[i][j] for j in order) for i in order)
        object.__setattr__(self, "points", sorted_pts)
        object.__setattr__(self, "rows", sorted_rows)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(sorted_pts)})

    def index(self, x: Vertex) -> int:
        try:
            return self._index[x]  # type: ignore[attr-defined]
        except KeyError:
            raise VertexNotFoundError(f"unknown point {x!r}")

    def distance(self, x: Vertex, y: Vertex) -> Fraction:
        return self.rows[self.index(x)][self.index(y)]

    def diameter(self) -> Fraction:
        return max((x for row in self.rows for x in row), default=ZERO)

    def classify(self) -> MetricClass:
        return classify_metric(self.rows)

    def rename(self, mapping: Mapping[Vertex, Vertex]) -> "FiniteMetricSpace":
        """Isometric copy under a point-renaming bijection."""
        new_pts = [mapping[p] for p in self.points]
        if len(set(new_pts)) != len(new_pts):
            raise ValueError("renaming is not injective")
        return FiniteMetricSpace(new_pts, self.rows)


def space_from(points: Iterable[Vertex], dist: Callable[[Vertex, Vertex], Fraction]) -> FiniteMetricSpace:
    pts = sorted(points)
    return FiniteMetricSpace(pts, [[dist(x, y) if x != y else ZERO for y in pts] for x in pts])


def classify_metric(rows: Sequence[Sequence[Fraction]]) -> MetricClass:
    """Strongest class a raw square matrix satisfies.

    Checks symmetry and zero diagonal (errors otherwise), then off-diagonal
    positivity, the triangle inequality and the strong triangle inequality.
    """
    n = len(rows)
    mat = [[Fraction(x) for x in r] for r in rows]
    if any(len(r) != n for r in mat):
        raise BadMatrixError("matrix not square")
    for i in range(n):
        if mat[i][i] != 0:
            raise BadMatrixError(f"nonzero diagonal at row {i}")
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise BadMatrixError(f"asymmetric at ({i}, {j})")

    if any(mat[i][j] < 0 for i in range(n) for j in range(n)):
        return MetricClass.NOT_SEMIMETRIC
    has_zero_pair = any(mat[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    strong = all(
        mat[i][j] <= max(mat[i][k], mat[k][j])
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(n)
    )
    if has_zero_pair:
        return MetricClass.PSEUDO_ULTRAMETRIC if strong else MetricClass.NOT_SEMIMETRIC
    if strong:
        return MetricClass.ULTRAMETRIC
    triangle = all(
        mat[i][j] <= mat[i][k] + mat[k][j]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(n)
    )
    return MetricClass.METRIC_ONLY if triangle else MetricClass.NOT_SEMIMETRIC


def additive_metric(t: Tree, w: WeightMap) -> FiniteMetricSpace:
    """Path-weight-sum distances on a strictly positively weighted tree."""
    weights = normalize_weights(t.underlying, w, strict=True)
    dist: dict[Vertex, dict[Vertex, Fraction]] = {}
    for src in t.vertices:
        row = {src: ZERO}
        stack = [src]
        while stack:
            x = stack.pop()
            for y in t.neighbors(x):
                if y not in row:
                    row[y] = row[x] + weights[edge_key(x, y)]
                    stack.append(y)
        dist[src] = row
    return space_from(t.vertices, lambda x, y: dist[x][y])


def shortest_path_metric(g: Graph, w: WeightMap) -> FiniteMetricSpace:
    """Minimum path-weight-sum over all joining paths; additive on trees."""
    if not g.is_connected():
        raise DisconnectedGraphError("shortest-path metric needs a connected graph")
    weights = normalize_weights(g, w, strict=True)
    dist: dict[Vertex, dict[Vertex, Fraction]] = {}
    for src in g.vertices:
        best: dict[Vertex, Fraction] = {}
        heap: list[tuple[Fraction, Vertex]] = [(ZERO, src)]
        while heap:
            d, x = heapq.heappop(heap)
            if x in best:
                continue
            best[x] = d
            for y in g.neighbors(x):
                if y not in best:
                    heapq.heappush(heap, (d + weights[edge_key(x, y)], y))
        dist[src] = best
    return space_from(g.vertices, lambda x, y: dist[x][y])


def _edge_condition(g: Graph, labels: LabelMap) -> bool:
    # Ultrametricity criterion: no edge has both endpoint labels zero.
    return all(max(labels[u], labels[v]) > 0 for u, v in g.edges)


def label_tree_metric(t: Tree, l: LabelMap) -> tuple[FiniteMetricSpace, MetricClass]:
    """Max vertex label along the unique path, endpoints included.

    Returns the space together with its class: ultrametric exactly when every
    edge carries at least one positive endpoint label, pseudoultrametric
    otherwise.
    """
    labels = normalize_labels(t.underlying, l)
    dist: dict[Vertex, dict[Vertex, Fraction]] = {}
    for src in t.vertices:
        row = {src: labels[src]}
        stack = [src]
        while stack:
            x = stack.pop()
            for y in t.neighbors(x):
                if y not in row:
                    row[y] = max(row[x], labels[y])
                    stack.append(y)
        dist[src] = row
    space = space_from(t.vertices, lambda x, y: dist[x][y])
    cls = MetricClass.ULTRAMETRIC if _edge_condition(t.underlying, labels) else MetricClass.PSEUDO_ULTRAMETRIC
    return space, cls


def minimax_label_metric(g: Graph, l: LabelMap) -> tuple[FiniteMetricSpace, MetricClass]:
    """Min over joining paths of the max vertex label along the path."""
    if not g.is_connected():
        raise DisconnectedGraphError("minimax label metric needs a connected graph")
    labels = normalize_labels(g, l)
    dist: dict[Vertex, dict[Vertex, Fraction]] = {}
    for src in g.vertices:
        best: dict[Vertex, Fraction] = {}
        heap: list[tuple[Fraction, Vertex]] = [(labels[src], src)]
        while heap:
            d, x = heapq.heappop(heap)
            if x in best:
                continue
            best[x] = d
            for y in g.neighbors(x):
                if y not in best:
                    heapq.heappush(heap, (max(d, labels[y]), y))
        dist[src] = best
    space = space_from(g.vertices, lambda x, y: dist[x][y])
    cls = MetricClass.ULTRAMETRIC if _edge_condition(g, labels) else MetricClass.PSEUDO_ULTRAMETRIC
    return space, cls


def restrict(space: FiniteMetricSpace, subset: Iterable[Vertex]) -> FiniteMetricSpace:
    """Submatrix on a nonempty subset of the points."""
    keep = sorted(set(subset))
    if not keep:
        raise EmptySetError("cannot restrict to the empty set")
    idx = [space.index(p) for p in keep]
    return FiniteMetricSpace(keep, [[space.rows[i][j] for j in idx] for i in idx])


def hausdorff_distance(space: FiniteMetricSpace, a: Iterable[Vertex], b: Iterable[Vertex]) -> Fraction:
    """Max of the two directed sup-inf distances between point subsets."""
    aset = sorted(set(a))
    bset = sorted(set(b))
    if not aset or not bset:
        raise EmptySetError("Hausdorff distance needs nonempty sets")
    ai = [space.index(p) for p in aset]
    bi = [space.index(p) for p in bset]
    forward = max(min(space.rows[i][j] for j in bi) for i in ai)
    backward = max(min(space.rows[i][j] for j in ai) for i in bi)
    return max(forward, backward)
