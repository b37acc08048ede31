#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliquedec/decomposition.hpp"

namespace cliquedec {

/// Default cap on the size of a merged block.
inline constexpr std::size_t kDefaultMaxBlockSize = 50;
/// Default number of merge rounds.
inline constexpr std::size_t kDefaultMergeRounds = 4;

/// Candidate combination of the two blocks at the ends of a clique-tree edge.
struct MergeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Shared variables |Ca ∩ Cb|.
  std::size_t overlap = 0;
  /// |Ca| + |Cb| - overlap.
  std::size_t merged_size = 0;
  /// Linking constraints removed by the merge: overlap(overlap+1)/2.
  std::uint64_t weight = 0;
};

/// Combination problem on a clique forest: pick a set of edges, no two
/// sharing a block, each with merged_size <= max_block_size, maximizing the
/// total weight.
struct MergeModel {
  std::size_t clique_count = 0;
  std::vector<MergeEdge> edges;
  std::size_t max_block_size = kDefaultMaxBlockSize;
};

struct MergePlan {
  /// Indices into the model's (and tree's) edge list, ascending.
  std::vector<std::size_t> selected_edges;
  std::uint64_t objective = 0;

  bool empty() const { return selected_edges.empty(); }
  friend bool operator==(const MergePlan&, const MergePlan&) = default;
};

class InvalidPlan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One model edge per tree edge, same order. Sizes and overlaps are counted
/// in real variables: doubled when `side` is kComplex.
MergeModel make_merge_model(const CliqueList& cliques, const CliqueTree& tree,
                            std::size_t max_block_size,
                            Side side = Side::kReal);

/// Throws std::invalid_argument unless the model's edges form a forest over
/// valid block indices with positive weights and max_block_size >= 1.
void validate(const MergeModel& model);

/// Exact maximum-weight size-capped matching on the forest, by dynamic
/// programming over each tree. Among optimal matchings the lexicographically
/// smallest ascending edge-index sequence is returned.
MergePlan solve_merge(const MergeModel& model);

struct MergedDecomposition {
  CliqueList cliques;
  CliqueTree tree;
};

/// Contracts every selected tree edge: the two blocks become their union and
/// the surviving edges reattach to it. A block that ends up inside a
/// neighbor is absorbed. The result is canonicalized. Throws InvalidPlan if
/// the plan is not a matching on `tree`.
MergedDecomposition apply_merge(const CliqueList& cliques,
                                const CliqueTree& tree, const MergePlan& plan);

struct RoundStats {
  std::size_t round = 0;
  std::size_t merges = 0;
  std::uint64_t objective = 0;
  std::size_t nc = 0;
  std::uint64_t nlc = 0;
  std::size_t max_block_size = 0;

  friend bool operator==(const RoundStats&, const RoundStats&) = default;
};

struct MergeResult {
  CliqueList cliques;
  CliqueTree tree;
  /// One entry per round that merged something.
  std::vector<RoundStats> rounds;
};

/// Repeats solve_merge + apply_merge up to `rounds` times, stopping at the
/// first empty plan.
MergeResult merge_rounds(const CliqueList& cliques, const CliqueTree& tree,
                         std::size_t max_block_size, std::size_t rounds,
                         Side side = Side::kReal);

}  // namespace cliquedec
