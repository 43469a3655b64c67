"""Spanning trees of directed line graphs, a de Bruijn sequence codec and
critical groups of de Bruijn and Kautz graphs."""

import json as _json

from ._core import (
    DiGraph,
    class_cycle,
    count_tree_arrays,
    count_trees,
    count_trees_rooted,
    critical_group,
    db_formula,
    debruijn,
    decode,
    encode,
    enumerate_db_sequences,
    enumerate_trees,
    graph_from_json,
    group_order_db,
    group_order_kautz,
    is_de_bruijn,
    is_eulerian,
    is_strongly_connected,
    kappa_db,
    kappa_kautz,
    kautz,
    kautz_formula,
    knuth_check,
    laplacian,
    line_graph,
    mult_by_k,
    read_edge_list,
    run_acceptance,
    run_cli,
    sandpile_group,
    smith_normal_form,
    sylow,
    verify_identity,
)
from . import _core

__version__ = "0.1.0"


def tree_arrays(g):
    """Every tree array of g as a dict {root, lists}."""
    return [_json.loads(a) for a in _core.enumerate_tree_arrays(g)]


def sigma(g, array, order_seed=None):
    """Tree array dict -> spanning tree of the line graph, {root, edges}."""
    return _json.loads(_core.sigma(g, _json.dumps(array), order_seed))


def pi(g, tree, order_seed=None):
    """Spanning tree of the line graph -> tree array dict."""
    return _json.loads(_core.pi(g, _json.dumps(tree), order_seed))
