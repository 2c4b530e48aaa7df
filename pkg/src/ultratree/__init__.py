"""Exact toolkit for finite ultrametric spaces and weighted/labeled trees."""

from .graphs import (
    Graph,
    Path,
    RootedTree,
    Tree,
    all_simple_paths,
    degree_sets,
    edge_key,
    find_cycle,
    find_path,
    subtree_below,
    tree_from_edges,
)
from .metrics import (
    FiniteMetricSpace,
    MetricClass,
    additive_metric,
    classify_metric,
    hausdorff_distance,
    label_tree_metric,
    minimax_label_metric,
    restrict,
    shortest_path_metric,
)
from .representing import (
    Ballean,
    LabeledRootedTree,
    ballean,
    ballean_tree,
    diametrical_graph,
    multipartite_parts,
    representing_tree,
)
from .canonical import (
    IsoFlavor,
    are_isomorphic,
    canonical_code,
    is_isometry,
    is_isomorphism,
    isometry_search,
    leaf_swap_isometry,
    tree_centers,
    ultrametric_isometric,
)
from .duality import (
    EquidistantTree,
    MonotoneTree,
    check_equidistant,
    check_monotone,
    generate_monotone,
    labeling_to_weight,
    weight_to_labeling,
)
from .transforms import (
    NablaResult,
    bottleneck_spanning_tree,
    passthrough_counterexample_pair,
    nabla_geometric_membership,
    cyclic_weight_counterexample,
    reduce_nabla,
)
from .analysis import (
    DiameterBound,
    StructureReport,
    analyze,
    centers,
    diameter_bound_check,
    is_star,
    phylo_shape,
    planted_leaf_ultrametric_check,
    sphere_center_check,
    star_equidistant_witness,
)
from .rational import Rational, format_rational, parse_rational

__version__ = "0.1.0"
