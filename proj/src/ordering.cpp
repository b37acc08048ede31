#include "cliquedec/ordering.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace cliquedec {

namespace {

/// Elimination graph with sorted adjacency; eliminating a node turns its
/// remaining neighborhood into a clique.
class EliminationGraph {
 public:
  explicit EliminationGraph(const SparsityGraph& g) : adj_(g.node_count()) {
    for (Node v = 0; v < g.node_count(); ++v) {
      adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
  }

  std::size_t degree(Node v) const { return adj_[v].size(); }

  /// Returns the former neighbors of v, whose degrees may have changed.
  std::vector<Node> eliminate(Node v) {
    std::vector<Node> nbrs = std::move(adj_[v]);
    adj_[v].clear();
    std::vector<Node> merged;
    for (Node u : nbrs) {
      merged.clear();
      std::set_union(adj_[u].begin(), adj_[u].end(), nbrs.begin(), nbrs.end(),
                     std::back_inserter(merged));
      std::erase_if(merged, [&](Node w) { return w == u || w == v; });
      adj_[u].swap(merged);
    }
    return nbrs;
  }

 private:
  std::vector<std::vector<Node>> adj_;
};

/// Eliminates, at each step, the node with the smallest (key(degree), index).
template <typename KeyFn>
Ordering greedy_elimination(const SparsityGraph& g, KeyFn key) {
  EliminationGraph eg(g);
  std::vector<long long> current(g.node_count());
  std::set<std::pair<long long, Node>> queue;
  for (Node v = 0; v < g.node_count(); ++v) {
    current[v] = key(eg.degree(v));
    queue.emplace(current[v], v);
  }
  std::vector<Node> perm;
  perm.reserve(g.node_count());
  while (!queue.empty()) {
    const Node v = queue.begin()->second;
    queue.erase(queue.begin());
    perm.push_back(v);
    for (Node u : eg.eliminate(v)) {
      queue.erase({current[u], u});
      current[u] = key(eg.degree(u));
      queue.emplace(current[u], u);
    }
  }
  return Ordering(std::move(perm));
}

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::mt19937_64::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

}  // namespace

std::string strategy_name(const OrderingStrategy& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, strategy::MinDegree>) {
          return "min_degree";
        } else if constexpr (std::is_same_v<T, strategy::Amd>) {
          return "amd";
        } else if constexpr (std::is_same_v<T, strategy::Random>) {
          return "random";
        } else if constexpr (std::is_same_v<T, strategy::MaxDegree>) {
          return "max_degree";
        } else {
          return "given";
        }
      },
      s);
}

OrderingStrategy parse_strategy(std::string_view name, std::uint64_t seed) {
  if (name == "min_degree" || name == "md") return strategy::MinDegree{};
  if (name == "amd") return strategy::Amd{};
  if (name == "random") return strategy::Random{seed};
  if (name == "max_degree" || name == "maxdeg") return strategy::MaxDegree{};
  throw std::invalid_argument("unknown ordering strategy '" +
                              std::string(name) + "'");
}

Ordering order_min_degree(const SparsityGraph& g) {
  return greedy_elimination(
      g, [](std::size_t d) { return static_cast<long long>(d); });
}

Ordering order_max_degree(const SparsityGraph& g) {
  return greedy_elimination(
      g, [](std::size_t d) { return -static_cast<long long>(d); });
}

Ordering order_random(const SparsityGraph& g, std::uint64_t seed) {
  std::vector<Node> perm(g.node_count());
  for (Node v = 0; v < perm.size(); ++v) perm[v] = v;
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[bounded(rng, i)]);
  }
  return Ordering(std::move(perm));
}

Ordering compute_ordering(const SparsityGraph& g,
                          const OrderingStrategy& strategy) {
  return std::visit(
      [&](const auto& s) -> Ordering {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, strategy::MinDegree>) {
          return order_min_degree(g);
        } else if constexpr (std::is_same_v<T, strategy::Amd>) {
          return order_amd(g);
        } else if constexpr (std::is_same_v<T, strategy::Random>) {
          return order_random(g, s.seed);
        } else if constexpr (std::is_same_v<T, strategy::MaxDegree>) {
          return order_max_degree(g);
        } else {
          if (s.order.size() != g.node_count()) {
            throw std::invalid_argument("given ordering has wrong size");
          }
          return s.order;
        }
      },
      strategy);
}

ChordalExtension symbolic_elimination(const SparsityGraph& g,
                                      const Ordering& order) {
  const std::size_t n = g.node_count();
  if (order.size() != n) {
    throw std::invalid_argument("ordering size does not match graph");
  }
  const auto pos = order.position();

  // higher[k]: positions of the later neighbors of order[k] in the filled
  // graph. Each node's set is the union of its own later neighbors and its
  // elimination-tree children's sets, so only the parent needs updating.
  std::vector<std::vector<std::size_t>> higher(n);
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<Edge> fill;
  std::vector<std::size_t> merged;

  for (std::size_t k = 0; k < n; ++k) {
    const Node v = order[k];
    std::vector<std::size_t> set;
    for (Node u : g.neighbors(v)) {
      if (pos[u] > k) set.push_back(pos[u]);
    }
    std::sort(set.begin(), set.end());
    for (std::size_t c : children[k]) {
      merged.clear();
      // Drop k itself, which is the front of every child's set.
      std::set_union(set.begin(), set.end(), higher[c].begin() + 1,
                     higher[c].end(), std::back_inserter(merged));
      set.swap(merged);
      std::vector<std::size_t>().swap(higher[c]);
    }
    for (std::size_t p : set) {
      const Node u = order[p];
      if (!g.has_edge(v, u)) fill.emplace_back(v, u);
    }
    if (!set.empty()) children[set.front()].push_back(k);
    higher[k] = std::move(set);
  }
  return ChordalExtension(g, std::move(fill), order);
}

}  // namespace cliquedec
