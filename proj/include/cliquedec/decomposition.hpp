#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliquedec/graph.hpp"
#include "cliquedec/pattern.hpp"

namespace cliquedec {

/// Sorted node set.
using Clique = std::vector<Node>;

/// Blocks of a decomposition over `node_count` variables, in canonical order
/// (lexicographic by sorted member list, hence by smallest member first).
struct CliqueList {
  std::size_t node_count = 0;
  std::vector<Clique> cliques;

  friend bool operator==(const CliqueList&, const CliqueList&) = default;
};

struct TreeEdge {
  std::size_t a = 0;  // a < b, clique indices
  std::size_t b = 0;
  Clique separator;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Spanning forest of the clique graph, edges sorted by (a, b).
struct CliqueTree {
  std::size_t clique_count = 0;
  std::vector<TreeEdge> edges;

  std::size_t component_count() const;

  friend bool operator==(const CliqueTree&, const CliqueTree&) = default;
};

struct DecompositionStats {
  std::size_t nc = 0;
  std::uint64_t nlc = 0;
  std::size_t max_clique_size = 0;
  std::size_t fill_count = 0;

  friend bool operator==(const DecompositionStats&,
                         const DecompositionStats&) = default;
};

/// Maximal cliques of base + fill, read off the PEO: each node with its
/// later neighbors is a candidate, and a candidate is dropped when a child in
/// the elimination tree extends it. Isolated nodes give singletons.
CliqueList maximal_cliques(const ChordalExtension& h);

/// Maximum-weight spanning forest of the clique graph (weight = overlap
/// size) by Prim's algorithm. Candidate edges are ranked by larger weight,
/// then smaller (a, b); each component grows from its smallest clique index.
CliqueTree build_clique_tree(const CliqueList& cliques);

/// Sum of k(k+1)/2 over tree edges, k the separator size in real variables.
/// With `side == kComplex` separators are doubled first.
std::uint64_t count_linking_constraints(const CliqueTree& tree, Side side);

/// Linking constraints of one separator of `k` real variables.
constexpr std::uint64_t linking_constraints(std::uint64_t k) {
  return k * (k + 1) / 2;
}

/// nc, nlc and max clique size (real variables) of a decomposition that
/// lives on `side`; fill_count taken from `h`.
DecompositionStats decomposition_stats(const ChordalExtension& h,
                                       const CliqueList& cliques,
                                       const CliqueTree& tree, Side side);

/// Same, for blocks without an extension at hand.
DecompositionStats decomposition_stats(const CliqueList& cliques,
                                       const CliqueTree& tree, Side side,
                                       std::size_t fill_count);

/// For every variable, the blocks containing it induce a connected subtree.
bool satisfies_running_intersection(const CliqueList& cliques,
                                    const CliqueTree& tree);

/// Sum of separator sizes.
std::uint64_t tree_weight(const CliqueTree& tree);

/// Complex-variable decomposition rewritten over real variables 2n, 2n+1.
/// Tree structure is unchanged.
CliqueList realify_cliques(const CliqueList& cliques);
CliqueTree realify_tree(const CliqueTree& tree);

/// Sorts blocks canonically and renumbers tree edges to match.
void canonicalize(CliqueList& cliques, CliqueTree& tree);

}  // namespace cliquedec
