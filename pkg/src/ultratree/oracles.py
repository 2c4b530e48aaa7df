"""Brute-force reference routes, independent of the fast implementations.

Everything here enumerates: unique tree paths by exhaustive simple-path
search, graph metrics by folding over all simple paths, balls by trying
every center and radius.  Enumeration refuses inputs beyond the test-scale
vertex cap (see all_simple_paths).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .graphs import Graph, Path, Tree, Vertex, all_simple_paths, edge_key
from .metrics import FiniteMetricSpace


def unique_path_by_enumeration(t: Tree, u: Vertex, v: Vertex) -> Path:
    """The u-v path found by exhaustive search; asserts uniqueness."""
    paths = list(all_simple_paths(t.underlying, u, v))
    if len(paths) != 1:
        raise AssertionError(f"expected exactly one path, found {len(paths)}")
    return paths[0]


def min_path_sum_by_enumeration(g: Graph, w: Mapping, u: Vertex, v: Vertex) -> Fraction:
    if u == v:
        return Fraction(0)
    weights = {edge_key(*e): Fraction(val) for e, val in w.items()}
    return min(
        sum(weights[edge_key(a, b)] for a, b in zip(p, p[1:]))
        for p in all_simple_paths(g, u, v)
    )


def minimax_label_by_enumeration(g: Graph, l: Mapping, u: Vertex, v: Vertex) -> Fraction:
    if u == v:
        return Fraction(0)
    labels = {x: Fraction(val) for x, val in l.items()}
    return min(max(labels[x] for x in p) for p in all_simple_paths(g, u, v))


def balls_by_enumeration(space: FiniteMetricSpace) -> set[frozenset[Vertex]]:
    """Every distinct ball, trying all centers and all realizable radii."""
    radii = {Fraction(0)} | {x for row in space.rows for x in row}
    out: set[frozenset[Vertex]] = set()
    for c in space.points:
        for r in radii:
            out.add(
                frozenset(x for x in space.points if space.distance(c, x) <= r)
            )
    return out
