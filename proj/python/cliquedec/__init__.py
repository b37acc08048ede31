"""Clique decompositions of power-network sparsity patterns."""

import json

from ._cliquedec import (
    DEFAULT_MAX_BLOCK_SIZE,
    DEFAULT_MERGE_ROUNDS,
    ChordalExtension,
    ConfigError,
    InvalidPlan,
    IoError,
    MalformedInput,
    SparsityGraph,
    build_clique_tree,
    count_linking_constraints,
    export_blocks,
    is_chordal,
    maximal_cliques,
    merge_rounds,
    order_amd,
    order_max_degree,
    order_min_degree,
    order_random,
    parse_matpower,
    realify_clique,
    realify_extension,
    realify_graph,
    run_pipeline,
    run_pipeline_edges,
    solve_merge,
    symbolic_elimination,
    verify_peo,
)


def decompose(branches, side="complex", order="min_degree", seed=0,
              smax=DEFAULT_MAX_BLOCK_SIZE, rounds=0, instance="instance"):
    """Report for an in-memory list of (bus, bus) branches, as a dict."""
    return json.loads(run_pipeline_edges(branches, side, order, seed, smax,
                                         rounds, instance))


def decompose_file(path, side="complex", order="min_degree", seed=0,
                   smax=DEFAULT_MAX_BLOCK_SIZE, rounds=0):
    """Report for a MATPOWER (.m) or edge-list file, as a dict."""
    return json.loads(run_pipeline(str(path), side, order, seed, smax, rounds))
