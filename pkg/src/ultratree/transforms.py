"""Structure-altering constructions on weighted trees and labeled graphs.

The out-degree-one reduction contracts every pass-through vertex of an
equidistant tree while preserving distances between out-degree-zero vertices.
The bottleneck spanning tree realizes the minimax label metric of a connected
graph on a tree.  Two counterexample builders produce weight pairs that are
isometric but non-isomorphic, one for cyclic graphs and one for rooted trees
with a pass-through vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .duality import EquidistantTree
from .errors import AcyclicInputError, DisconnectedGraphError, PathTreeError
from .graphs import Edge, Graph, RootedTree, Tree, Vertex, degree_sets, edge_key, find_cycle
from .metrics import normalize_labels


@dataclass(frozen=True)
class NablaResult:
    reduced: EquidistantTree
    removed: frozenset[Vertex]
    new_root: Vertex


def reduce_nabla(et: EquidistantTree) -> NablaResult:
    """Suppress every out-degree-one vertex of an equidistant tree.

    A hanging root chain is dropped by re-rooting at the nearest branching
    descendant; every other out-degree-one vertex is replaced by a single
    edge carrying the sum of its two incident weights.  Fails on weighted
    paths, where nothing would remain.
    """
    v0, v1, v2 = degree_sets(et.rt)
    if not v2:
        raise PathTreeError("every vertex has out-degree at most one")

    root = et.rt.root
    vertices = set(et.rt.vertices)
    weights = dict(et.weights)

    rt = et.rt
    while rt.out_degree(root) == 1:
        (child,) = rt.children(root)
        vertices.discard(root)
        del weights[edge_key(root, child)]
        root = child
        rt = RootedTree(Tree(Graph(vertices, weights.keys())), root)

    while True:
        _, ones, _ = degree_sets(rt)
        if not ones:
            break
        v = min(ones)
        parent = rt.parent(v)
        (child,) = rt.children(v)
        assert parent is not None
        merged = weights[edge_key(parent, v)] + weights[edge_key(v, child)]
        vertices.discard(v)
        del weights[edge_key(parent, v)]
        del weights[edge_key(v, child)]
        weights[edge_key(parent, child)] = merged
        rt = RootedTree(Tree(Graph(vertices, weights.keys())), root)

    reduced = EquidistantTree(rt, weights)
    removed = frozenset(et.rt.vertices) - vertices
    assert removed == v1
    return NablaResult(reduced, removed, root)


def nabla_geometric_membership(et: EquidistantTree, x: Vertex) -> bool:
    """Membership in the reduced vertex set, read off the metric alone.

    True iff some pair y, z of out-degree-zero vertices (possibly equal) has
    x as its metric midpoint: d(y,x) = d(x,z) = d(y,z)/2.
    """
    _, _, v2 = degree_sets(et.rt)
    if not v2:
        raise PathTreeError("every vertex has out-degree at most one")
    space = et.metric()
    leaves = sorted(et.v0())
    return any(
        space.distance(y, x) == space.distance(x, z) == space.distance(y, z) / 2
        for y in leaves
        for z in leaves
    )


def bottleneck_spanning_tree(g: Graph, l: Mapping) -> Tree:
    """A spanning tree whose max-label path metric equals the graph's
    minimax label metric.

    While a cycle remains, a maximum-label vertex on it loses one of its two
    cycle edges; ties and the edge choice resolve lexicographically.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("spanning tree needs a connected graph")
    labels = normalize_labels(g, l)
    current = g
    while True:
        cycle = find_cycle(current)
        if cycle is None:
            break
        top = max(labels[v] for v in cycle)
        v1 = min(v for v in cycle if labels[v] == top)
        i = cycle.index(v1)
        around = (cycle[i - 1], cycle[(i + 1) % len(cycle)])
        doomed = min(edge_key(v1, u) for u in around)
        current = Graph(current.vertices, [e for e in current.edges if e != doomed])
    return Tree(current)


def _cycle_edge(g: Graph) -> Edge:
    # Lexicographically smallest edge lying on a cycle (= smallest non-bridge).
    for e in g.edges:
        rest = Graph(g.vertices, [f for f in g.edges if f != e])
        comp = rest.components()
        u, v = e
        if any(u in c and v in c for c in comp):
            return e
    raise AcyclicInputError("graph has no cycle")


def cyclic_weight_counterexample(g: Graph) -> tuple[dict[Edge, Fraction], dict[Edge, Fraction]]:
    """Two weightings of one cyclic graph: non-isomorphic as weighted graphs,
    yet their shortest-path metric spaces are isometric.

    A fixed cycle edge gets weight 1+|E| in the first and 2+|E| in the
    second, all other edges weight 1; the heavy edge is never on a shortest
    path, so both metrics equal the graph metric without that edge.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("need a connected graph")
    e0 = _cycle_edge(g)
    m = len(g.edges)
    w1 = {e: Fraction(1) for e in g.edges}
    w2 = {e: Fraction(1) for e in g.edges}
    w1[e0] = Fraction(1 + m)
    w2[e0] = Fraction(2 + m)
    return w1, w2


def passthrough_counterexample_pair(et: EquidistantTree) -> tuple[EquidistantTree, EquidistantTree]:
    """Two equidistant weights on one rooted tree with a pass-through vertex:
    non-isomorphic as rooted weighted trees, with identical distance
    matrices on the out-degree-zero vertices.

    At a non-root pass-through vertex the two incident weights are re-split
    two different ways with the same sum, using four fresh values; when the
    root is the only pass-through vertex its pendant edge is re-weighted
    instead, which shifts K but no leaf-to-leaf distance.
    """
    _, ones, _ = degree_sets(et.rt)
    if not ones:
        raise PathTreeError("no out-degree-one vertex to exploit")
    existing = set(et.weights.values())

    interior = sorted(v for v in ones if v != et.rt.root)
    if interior:
        v = interior[0]
        parent = et.rt.parent(v)
        (child,) = et.rt.children(v)
        assert parent is not None
        e_up, e_down = edge_key(parent, v), edge_key(v, child)
        total = et.weights[e_up] + et.weights[e_down]
        # Each existing weight can rule out at most four q values.
        for q in range(7, 4 * len(existing) + 17, 2):
            eps = total / q
            values = (total / 2 - eps, total / 2 + eps, total / 2 - 2 * eps, total / 2 + 2 * eps)
            if len(set(values)) == 4 and not (set(values) & existing) and min(values) > 0:
                s1, s2, t1, t2 = values
                w1 = dict(et.weights)
                w2 = dict(et.weights)
                w1[e_up], w1[e_down] = s1, s2
                w2[e_up], w2[e_down] = t1, t2
                return EquidistantTree(et.rt, w1), EquidistantTree(et.rt, w2)
        raise RuntimeError("could not find fresh split values")

    # Root is the only pass-through vertex: re-weight its pendant edge.
    (child,) = et.rt.children(et.rt.root)
    e = edge_key(et.rt.root, child)
    base = et.weights[e]
    for q in range(2, 100):
        fresh = base * Fraction(q + 1, q)
        if fresh not in existing:
            w2 = dict(et.weights)
            w2[e] = fresh
            return EquidistantTree(et.rt, dict(et.weights)), EquidistantTree(et.rt, w2)
    raise RuntimeError("could not find a fresh pendant weight")
