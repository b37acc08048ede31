#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cliquedec {

using Node = std::size_t;

/// Unordered node pair, always stored with first < second.
struct Edge {
  Node first = 0;
  Node second = 0;

  Edge() = default;
  Edge(Node u, Node v) : first(u < v ? u : v), second(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Which half of a complex variable a node stands for. Complex-pattern
/// nodes carry `kNone`.
enum class VariablePart : std::uint8_t { kNone, kRe, kIm };

struct NodeLabel {
  std::int64_t bus = 0;
  VariablePart part = VariablePart::kNone;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Undirected simple graph with dense 0-based node indices and sorted
/// neighbor lists. Immutable once built; `with_edges` returns a new graph.
class SparsityGraph {
 public:
  SparsityGraph() = default;

  /// Edgeless graph on `node_count` nodes labelled 0..n-1.
  explicit SparsityGraph(std::size_t node_count);

  /// Throws std::invalid_argument on a self-loop or an out-of-range endpoint.
  /// Duplicate edges are collapsed. When `labels` is empty, node i gets
  /// bus id i.
  SparsityGraph(std::size_t node_count, std::span<const Edge> edges,
                std::vector<NodeLabel> labels = {});

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  std::size_t degree(Node v) const { return adjacency_[v].size(); }
  bool has_edge(Node u, Node v) const;

  /// All edges, sorted.
  std::vector<Edge> edges() const;

  const std::vector<NodeLabel>& labels() const { return labels_; }

  /// Union of this graph with `extra` (same nodes and labels).
  SparsityGraph with_edges(std::span<const Edge> extra) const;

  friend bool operator==(const SparsityGraph&, const SparsityGraph&) = default;

 private:
  std::vector<std::vector<Node>> adjacency_;
  std::vector<NodeLabel> labels_;
  std::size_t edge_count_ = 0;
};

/// A permutation of 0..n-1. perm()[k] is the k-th node in the order.
class Ordering {
 public:
  Ordering() = default;
  /// Throws std::invalid_argument if `perm` is not a permutation.
  explicit Ordering(std::vector<Node> perm);

  static Ordering identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  const std::vector<Node>& perm() const { return perm_; }
  Node operator[](std::size_t k) const { return perm_[k]; }

  /// position()[v] is the index of v in the order.
  std::vector<std::size_t> position() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Node> perm_;
};

struct ChordalityResult {
  bool chordal = false;
  /// Set when `chordal` is true.
  std::optional<Ordering> peo;
};

/// Lexicographic BFS (ties to the smallest node index) followed by PEO
/// verification of the reversed visit order.
ChordalityResult is_chordal(const SparsityGraph& g);

/// True iff for every node v the neighbors of v placed after v in `order`
/// are pairwise adjacent. A size mismatch yields false.
bool verify_peo(const SparsityGraph& g, const Ordering& order);

/// Neighbors of v restricted to `active`, sorted.
std::vector<Node> induced_neighbors(const SparsityGraph& g, Node v,
                                    std::span<const Node> active);

/// A graph made chordal by adding fill edges, with the elimination order
/// that witnesses it. The constructor enforces fill/base disjointness and
/// that `peo` is a perfect elimination ordering of base + fill.
class ChordalExtension {
 public:
  ChordalExtension() = default;
  /// Throws std::invalid_argument when an invariant does not hold.
  ChordalExtension(SparsityGraph base, std::vector<Edge> fill_edges,
                   Ordering peo);

  const SparsityGraph& base() const { return base_; }
  /// Sorted.
  const std::vector<Edge>& fill_edges() const { return fill_; }
  const Ordering& peo() const { return peo_; }
  /// base + fill.
  const SparsityGraph& filled() const { return filled_; }

  std::size_t fill_count() const { return fill_.size(); }

 private:
  SparsityGraph base_;
  std::vector<Edge> fill_;
  Ordering peo_;
  SparsityGraph filled_;
};

/// True iff every pair in `nodes` is adjacent in g.
bool is_clique(const SparsityGraph& g, std::span<const Node> nodes);

}  // namespace cliquedec
