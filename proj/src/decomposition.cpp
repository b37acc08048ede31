#include "cliquedec/decomposition.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <tuple>

namespace cliquedec {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Clique intersect(const Clique& a, const Clique& b) {
  Clique out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::size_t CliqueTree::component_count() const {
  DisjointSets sets(clique_count);
  std::size_t components = clique_count;
  for (const TreeEdge& e : edges) {
    if (sets.unite(e.a, e.b)) --components;
  }
  return components;
}

CliqueList maximal_cliques(const ChordalExtension& h) {
  const SparsityGraph& g = h.filled();
  const std::size_t n = g.node_count();
  const auto pos = h.peo().position();

  std::vector<std::size_t> later_count(n, 0);
  std::vector<Node> parent(n, n);
  for (Node v = 0; v < n; ++v) {
    for (Node w : g.neighbors(v)) {
      if (pos[w] <= pos[v]) continue;
      ++later_count[v];
      if (parent[v] == n || pos[w] < pos[parent[v]]) parent[v] = w;
    }
  }
  std::vector<bool> maximal(n, true);
  for (Node u = 0; u < n; ++u) {
    const Node p = parent[u];
    if (p != n && later_count[u] == later_count[p] + 1) maximal[p] = false;
  }

  CliqueList out;
  out.node_count = n;
  for (Node v = 0; v < n; ++v) {
    if (!maximal[v]) continue;
    Clique c{v};
    for (Node w : g.neighbors(v)) {
      if (pos[w] > pos[v]) c.push_back(w);
    }
    std::sort(c.begin(), c.end());
    out.cliques.push_back(std::move(c));
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

CliqueTree build_clique_tree(const CliqueList& list) {
  const std::size_t r = list.cliques.size();
  std::vector<std::vector<std::size_t>> containing(list.node_count);
  for (std::size_t i = 0; i < r; ++i) {
    for (Node x : list.cliques[i]) containing[x].push_back(i);
  }

  // Clique graph: overlap weights between every pair sharing a node.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(r);
  std::vector<std::size_t> overlap(r, 0);
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < r; ++i) {
    seen.clear();
    for (Node x : list.cliques[i]) {
      for (std::size_t j : containing[x]) {
        if (j <= i) continue;
        if (overlap[j]++ == 0) seen.push_back(j);
      }
    }
    for (std::size_t j : seen) {
      adj[i].emplace_back(j, overlap[j]);
      adj[j].emplace_back(i, overlap[j]);
      overlap[j] = 0;
    }
  }

  CliqueTree tree;
  tree.clique_count = r;
  std::vector<bool> in_tree(r, false);
  // (-weight, lower index, higher index): set order is the tie-break order.
  using Candidate = std::tuple<long long, std::size_t, std::size_t>;
  std::set<Candidate> frontier;
  auto push_edges = [&](std::size_t i) {
    for (auto [j, w] : adj[i]) {
      if (!in_tree[j]) {
        frontier.emplace(-static_cast<long long>(w), std::min(i, j),
                         std::max(i, j));
      }
    }
  };
  for (std::size_t root = 0; root < r; ++root) {
    if (in_tree[root]) continue;
    in_tree[root] = true;
    push_edges(root);
    while (!frontier.empty()) {
      auto [neg_w, a, b] = *frontier.begin();
      frontier.erase(frontier.begin());
      if (in_tree[a] && in_tree[b]) continue;
      const std::size_t next = in_tree[a] ? b : a;
      in_tree[next] = true;
      tree.edges.push_back(
          {a, b, intersect(list.cliques[a], list.cliques[b])});
      push_edges(next);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& x, const TreeEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return tree;
}

std::uint64_t count_linking_constraints(const CliqueTree& tree, Side side) {
  const std::uint64_t scale = side == Side::kComplex ? 2 : 1;
  std::uint64_t total = 0;
  for (const TreeEdge& e : tree.edges) {
    total += linking_constraints(scale * e.separator.size());
  }
  return total;
}

DecompositionStats decomposition_stats(const CliqueList& cliques,
                                       const CliqueTree& tree, Side side,
                                       std::size_t fill_count) {
  const std::size_t scale = side == Side::kComplex ? 2 : 1;
  DecompositionStats stats;
  stats.nc = cliques.cliques.size();
  stats.nlc = count_linking_constraints(tree, side);
  for (const Clique& c : cliques.cliques) {
    stats.max_clique_size = std::max(stats.max_clique_size, scale * c.size());
  }
  stats.fill_count = fill_count;
  return stats;
}

DecompositionStats decomposition_stats(const ChordalExtension& h,
                                       const CliqueList& cliques,
                                       const CliqueTree& tree, Side side) {
  return decomposition_stats(cliques, tree, side, h.fill_count());
}

bool satisfies_running_intersection(const CliqueList& cliques,
                                    const CliqueTree& tree) {
  const std::size_t r = cliques.cliques.size();
  if (tree.clique_count != r) return false;
  DisjointSets sets(r);
  std::vector<std::size_t> occurrences(cliques.node_count, 0);
  std::vector<std::size_t> linked(cliques.node_count, 0);
  for (const Clique& c : cliques.cliques) {
    for (Node x : c) {
      if (x >= cliques.node_count) return false;
      ++occurrences[x];
    }
  }
  for (const TreeEdge& e : tree.edges) {
    if (e.a >= r || e.b >= r || !sets.unite(e.a, e.b)) return false;
    const Clique sep = intersect(cliques.cliques[e.a], cliques.cliques[e.b]);
    if (sep.empty() || sep != e.separator) return false;
    for (Node x : sep) ++linked[x];
  }
  // Blocks holding x span a forest; it is one subtree iff it has
  // (count - 1) edges.
  for (Node x = 0; x < cliques.node_count; ++x) {
    if (occurrences[x] > 0 && linked[x] + 1 != occurrences[x]) return false;
  }
  return true;
}

std::uint64_t tree_weight(const CliqueTree& tree) {
  std::uint64_t total = 0;
  for (const TreeEdge& e : tree.edges) total += e.separator.size();
  return total;
}

CliqueList realify_cliques(const CliqueList& cliques) {
  CliqueList out;
  out.node_count = 2 * cliques.node_count;
  out.cliques.reserve(cliques.cliques.size());
  for (const Clique& c : cliques.cliques) {
    out.cliques.push_back(realify_clique(c));
  }
  return out;
}

CliqueTree realify_tree(const CliqueTree& tree) {
  CliqueTree out = tree;
  for (TreeEdge& e : out.edges) e.separator = realify_clique(e.separator);
  return out;
}

void canonicalize(CliqueList& cliques, CliqueTree& tree) {
  const std::size_t r = cliques.cliques.size();
  for (Clique& c : cliques.cliques) std::sort(c.begin(), c.end());
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cliques.cliques[x] < cliques.cliques[y];
  });
  std::vector<std::size_t> rank(r);
  std::vector<Clique> sorted(r);
  for (std::size_t k = 0; k < r; ++k) {
    rank[order[k]] = k;
    sorted[k] = std::move(cliques.cliques[order[k]]);
  }
  cliques.cliques = std::move(sorted);
  for (TreeEdge& e : tree.edges) {
    const std::size_t a = rank[e.a];
    const std::size_t b = rank[e.b];
    e.a = std::min(a, b);
    e.b = std::max(a, b);
    std::sort(e.separator.begin(), e.separator.end());
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& x, const TreeEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  tree.clique_count = r;
}

}  // namespace cliquedec
