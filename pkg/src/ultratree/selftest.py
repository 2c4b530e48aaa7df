"""Executable claims over the bundled figure corpus.

Each corpus file holds one worked instance plus its expected outcomes; the
runner re-derives every outcome and reports one PASS/FAIL line per claim.
A few seeded generator round trips run at the end; the seed comes from the
caller (the CLI reads ULTRATREE_SEED).  Output is deterministic byte for
byte given the same seed.
"""

from __future__ import annotations

import json
import random
from importlib import resources
from typing import Callable

from . import io as tio
from .analysis import centers, diameter_bound_check, planted_leaf_ultrametric_check
from .canonical import IsoFlavor, canonical_code
from .duality import EquidistantTree, MonotoneTree, generate_monotone, labeling_to_weight, weight_to_labeling
from .graphs import RootedTree, find_path
from .metrics import label_tree_metric, minimax_label_metric, restrict
from .rational import parse_rational
from .representing import ballean, representing_tree
from .transforms import nabla_geometric_membership, reduce_nabla, bottleneck_spanning_tree

FIGURES = ("fig3", "fig5", "fig6", "fig10", "fig11", "fig13")


def load_figure(name: str) -> dict:
    text = resources.files("ultratree.corpus").joinpath(f"{name}.json").read_text("utf-8")
    return json.loads(text)


def _check_fig3(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    t = inp.tree()
    got = sorted(centers(t, inp.weights))
    out = [("centers", got == exp["centers"])]
    et = EquidistantTree(RootedTree(t, "v1"), inp.weights)
    out.append(("K-at-v1", et.K == parse_rational(exp["K_at_v1"])))
    bound = diameter_bound_check(et)
    out.append(
        (
            "v0-diameter-equals-2K",
            bound.diam_v0 == parse_rational(exp["diam_v0_at_v1"]) and not bound.strict,
        )
    )
    return out


def _check_fig5(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    et = EquidistantTree(inp.rooted(), inp.weights)
    result = reduce_nabla(et)
    want = tio.graph_from_json(exp["reduced"])
    want_et = EquidistantTree(want.rooted(), want.weights)
    out = [
        ("reduction-shape", result.reduced == want_et and result.new_root == want.root),
        ("removed-set", sorted(result.removed) == exp["removed"]),
        (
            "size-identity",
            len(result.reduced.rt.vertices) + len(result.removed) == len(et.rt.vertices),
        ),
    ]
    member = {
        v: nabla_geometric_membership(et, v) for v in et.rt.vertices
    }
    out.append(("midpoint-membership", member == exp["membership"]))
    return out


def _check_fig6(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    space, _ = minimax_label_metric(inp.graph, inp.labels)
    want_space = tio.matrix_from_json(exp["minimax_matrix"])
    out = [("minimax-matrix", space == want_space)]

    spanning = bottleneck_spanning_tree(inp.graph, inp.labels)
    realized, _ = label_tree_metric(spanning, {v: inp.labels[v] for v in spanning.vertices})
    out.append(("spanning-tree-realizes-minimax", realized == space))

    from .representing import diametrical_graph, multipartite_parts

    blocks = [list(b) for b in multipartite_parts(diametrical_graph(space))]
    out.append(("diametrical-blocks", blocks == exp["blocks"]))

    tree = representing_tree(space)
    got_code = canonical_code(
        tree.rt.tree, IsoFlavor.ROOTED_LABELED, labels=tree.labels, root=tree.rt.root
    )
    shown = tio.graph_from_json(exp["hierarchy_tree"])
    want_code = canonical_code(
        shown.tree(), IsoFlavor.ROOTED_LABELED, labels=shown.labels, root=shown.root
    )
    out.append(("hierarchy-tree-shape", got_code == want_code))
    return out


def _check_fig10(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    et = EquidistantTree(inp.rooted(), inp.weights)
    out = [("K", et.K == parse_rational(exp["K"]))]
    space = et.metric()
    leaf_space = restrict(space, et.rt.tree.leaves())
    out.append(("leaf-restriction-class", leaf_space.classify().value == exp["leaf_class"]))
    holds, lhs, rhs = planted_leaf_ultrametric_check(et)
    out.append(
        (
            "branching-inequality",
            (holds, lhs, rhs)
            == (exp["holds"], parse_rational(exp["lhs"]), parse_rational(exp["rhs"])),
        )
    )
    bound = diameter_bound_check(et)
    out.append(
        ("planted-strict-bound", bound.strict and bound.diam_v0 == parse_rational(exp["diam_v0"]))
    )
    return out


def _check_fig11(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    rt = inp.rooted()
    et = EquidistantTree(rt, inp.weights)
    mt = MonotoneTree(rt, inp.labels)
    out = [("K", et.K == parse_rational(exp["K"]))]
    out.append(("weights-to-labels", weight_to_labeling(et).labels == mt.labels))
    out.append(("labels-to-weights", labeling_to_weight(mt).weights == et.weights))
    out.append(
        ("round-trip", labeling_to_weight(weight_to_labeling(et)).weights == et.weights)
    )
    return out


def _check_fig13(doc: dict) -> list[tuple[str, bool]]:
    inp = tio.graph_from_json(doc["input"])
    exp = doc["expected"]
    t = inp.tree()
    from .metrics import additive_metric

    space = additive_metric(t, inp.weights)
    leaf_space = restrict(space, exp["leaf_points"])
    out = [("leaf-restriction-class", leaf_space.classify().value == exp["leaf_class"])]
    out.append(("no-centers", sorted(centers(t, inp.weights)) == exp["centers"]))
    out.append(("path", list(find_path(t, "x1", "x4")) == exp["path_x1_x4"]))
    out.append(
        (
            "distances",
            space.distance("x1", "x2") == parse_rational(exp["d_x1_x2"])
            and space.distance("x1", "x3") == parse_rational(exp["d_x1_x3"])
            and space.distance("x3", "x4") == parse_rational(exp["d_x3_x4"]),
        )
    )
    return out


_CHECKERS: dict[str, Callable[[dict], list[tuple[str, bool]]]] = {
    "fig3": _check_fig3,
    "fig5": _check_fig5,
    "fig6": _check_fig6,
    "fig10": _check_fig10,
    "fig11": _check_fig11,
    "fig13": _check_fig13,
}


def _generator_claims(seed: int) -> list[tuple[str, str, bool]]:
    rng = random.Random(seed)
    out = []
    for i in range(5):
        mt = generate_monotone(rng, 1, 10)
        back = weight_to_labeling(labeling_to_weight(mt))
        out.append(("generated", f"dual-round-trip-{i}", back.labels == mt.labels))
    for i in range(5):
        mt = generate_monotone(rng, 1, 9, branching_only=True)
        space = restrict(mt.metric(), mt.v0())
        tree = representing_tree(space)
        code_a = canonical_code(
            tree.rt.tree, IsoFlavor.ROOTED_LABELED, labels=tree.labels, root=tree.rt.root
        )
        code_b = canonical_code(
            mt.rt.tree, IsoFlavor.ROOTED_LABELED, labels=mt.labels, root=mt.rt.root
        )
        out.append(("generated", f"hierarchy-round-trip-{i}", code_a == code_b))
    for i in range(3):
        mt = generate_monotone(rng, 1, 8, branching_only=True)
        space = restrict(mt.metric(), mt.v0())
        balls = ballean(space)
        tree = representing_tree(space)
        out.append(
            ("generated", f"ballean-size-{i}", len(balls) == len(tree.rt.vertices))
        )
    return out


def run_selftest(seed: int = 0) -> tuple[str, bool]:
    """Run every corpus claim; returns (report text, all passed)."""
    lines = []
    all_ok = True
    for figure in FIGURES:
        doc = load_figure(figure)
        for claim, ok in _CHECKERS[figure](doc):
            all_ok &= ok
            lines.append(f"{figure} {claim} {'PASS' if ok else 'FAIL'}")
    for figure, claim, ok in _generator_claims(seed):
        all_ok &= ok
        lines.append(f"{figure} {claim} {'PASS' if ok else 'FAIL'}")
    passed = sum(1 for line in lines if line.endswith("PASS"))
    lines.append(f"selftest: {passed}/{len(lines)} claims passed")
    return "\n".join(lines) + "\n", all_ok
