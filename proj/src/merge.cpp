#include "cliquedec/merge.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace cliquedec {

namespace {

/// Matching search state over the eligible edges of a forest. Edges are
/// decided in index order; vertices matched by an accepted edge drop out.
class ForestMatcher {
 public:
  explicit ForestMatcher(const MergeModel& model)
      : model_(model),
        adj_(model.clique_count),
        matched_(model.clique_count, false),
        decided_(model.edges.size(), false),
        stamp_of_(model.clique_count, 0),
        free_(model.clique_count, 0),
        best_(model.clique_count, 0),
        gain_(model.clique_count, 0) {
    for (std::size_t e = 0; e < model.edges.size(); ++e) {
      const MergeEdge& edge = model.edges[e];
      if (edge.merged_size > model.max_block_size) {
        decided_[e] = true;
        continue;
      }
      adj_[edge.a].emplace_back(edge.b, e);
      adj_[edge.b].emplace_back(edge.a, e);
    }
  }

  MergePlan solve() {
    MergePlan plan;
    for (std::size_t e = 0; e < model_.edges.size(); ++e) {
      if (!active(e)) continue;
      const MergeEdge& edge = model_.edges[e];
      std::vector<std::size_t> component;
      const std::uint64_t without_choice = optimum_from(edge.a, &component);

      matched_[edge.a] = matched_[edge.b] = true;
      std::uint64_t with_edge = edge.weight;
      ++stamp_;
      for (std::size_t v : component) {
        if (!matched_[v] && stamp_of_[v] != stamp_) {
          with_edge += optimum_of_tree(v, nullptr);
        }
      }
      decided_[e] = true;
      if (with_edge == without_choice) {
        plan.selected_edges.push_back(e);
        plan.objective += edge.weight;
      } else {
        matched_[edge.a] = matched_[edge.b] = false;
      }
    }
    return plan;
  }

 private:
  bool active(std::size_t e) const {
    const MergeEdge& edge = model_.edges[e];
    return !decided_[e] && !matched_[edge.a] && !matched_[edge.b];
  }

  std::uint64_t optimum_from(std::size_t root,
                             std::vector<std::size_t>* visited) {
    ++stamp_;
    return optimum_of_tree(root, visited);
  }

  /// Maximum matching weight on the tree of active edges containing `root`.
  /// Visits are recorded under the current stamp.
  std::uint64_t optimum_of_tree(std::size_t root,
                                std::vector<std::size_t>* visited) {
    // Iterative DFS preorder with parent edges.
    order_.clear();
    parent_edge_.clear();
    stack_.assign(1, {root, model_.edges.size()});
    stamp_of_[root] = stamp_;
    while (!stack_.empty()) {
      auto [u, via] = stack_.back();
      stack_.pop_back();
      order_.push_back(u);
      parent_edge_.push_back(via);
      for (auto [w, e] : adj_[u]) {
        if (!active(e) || stamp_of_[w] == stamp_) continue;
        stamp_of_[w] = stamp_;
        stack_.push_back({w, e});
      }
    }
    // free_[u]: best in u's subtree with u unmatched; best_[u]: overall.
    for (std::size_t u : order_) {
      free_[u] = 0;
      gain_[u] = 0;
    }
    for (std::size_t k = order_.size(); k-- > 0;) {
      const std::size_t u = order_[k];
      best_[u] = free_[u] + gain_[u];
      if (k == 0) break;
      const std::size_t e = parent_edge_[k];
      const MergeEdge& edge = model_.edges[e];
      const std::size_t p = edge.a == u ? edge.b : edge.a;
      free_[p] += best_[u];
      // Matching p with u trades best_[u] for free_[u] + weight.
      const std::uint64_t via_u = free_[u] + edge.weight;
      if (via_u > best_[u]) {
        gain_[p] = std::max(gain_[p], via_u - best_[u]);
      }
    }
    if (visited) visited->assign(order_.begin(), order_.end());
    return best_[root];
  }

  const MergeModel& model_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::vector<bool> matched_;
  std::vector<bool> decided_;
  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> stamp_of_;
  std::vector<std::uint64_t> free_;
  std::vector<std::uint64_t> best_;
  std::vector<std::uint64_t> gain_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::pair<std::size_t, std::size_t>> stack_;
};

Clique set_union(const Clique& a, const Clique& b) {
  Clique out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Clique set_intersection(const Clique& a, const Clique& b) {
  Clique out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

/// Contracts tree edge `k`: its lower block takes the union, the higher one is
/// removed and indices above it shift down.
void contract(std::vector<Clique>& blocks, std::vector<TreeEdge>& edges,
              std::size_t k) {
  const std::size_t keep = edges[k].a;
  const std::size_t gone = edges[k].b;
  blocks[keep] = set_union(blocks[keep], blocks[gone]);
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(gone));
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k));
  for (TreeEdge& e : edges) {
    for (std::size_t* end : {&e.a, &e.b}) {
      if (*end == gone) *end = keep;
      if (*end > gone) --*end;
    }
    if (e.a > e.b) std::swap(e.a, e.b);
  }
}

}  // namespace

MergeModel make_merge_model(const CliqueList& cliques, const CliqueTree& tree,
                            std::size_t max_block_size, Side side) {
  const std::size_t scale = side == Side::kComplex ? 2 : 1;
  MergeModel model;
  model.clique_count = cliques.cliques.size();
  model.max_block_size = max_block_size;
  model.edges.reserve(tree.edges.size());
  for (const TreeEdge& e : tree.edges) {
    const std::size_t overlap =
        set_intersection(cliques.cliques[e.a], cliques.cliques[e.b]).size();
    MergeEdge m;
    m.a = e.a;
    m.b = e.b;
    m.overlap = scale * overlap;
    m.merged_size = scale * (cliques.cliques[e.a].size() +
                             cliques.cliques[e.b].size() - overlap);
    m.weight = linking_constraints(m.overlap);
    model.edges.push_back(m);
  }
  validate(model);
  return model;
}

void validate(const MergeModel& model) {
  if (model.max_block_size < 1) {
    throw std::invalid_argument("max block size must be at least 1");
  }
  std::vector<std::size_t> parent(model.clique_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const MergeEdge& e : model.edges) {
    if (e.a >= model.clique_count || e.b >= model.clique_count ||
        e.a == e.b) {
      throw std::invalid_argument("merge edge has invalid endpoints");
    }
    if (e.weight == 0) {
      throw std::invalid_argument("merge edge has zero weight");
    }
    const std::size_t ra = find(e.a);
    const std::size_t rb = find(e.b);
    if (ra == rb) throw std::invalid_argument("merge edges contain a cycle");
    parent[ra] = rb;
  }
}

MergePlan solve_merge(const MergeModel& model) {
  validate(model);
  return ForestMatcher(model).solve();
}

MergedDecomposition apply_merge(const CliqueList& cliques,
                                const CliqueTree& tree,
                                const MergePlan& plan) {
  std::vector<bool> endpoint_used(cliques.cliques.size(), false);
  std::vector<bool> selected(tree.edges.size(), false);
  for (std::size_t k : plan.selected_edges) {
    if (k >= tree.edges.size()) {
      throw InvalidPlan("plan references tree edge " + std::to_string(k) +
                        " which does not exist");
    }
    if (selected[k]) throw InvalidPlan("plan repeats a tree edge");
    const TreeEdge& e = tree.edges[k];
    if (endpoint_used[e.a] || endpoint_used[e.b]) {
      throw InvalidPlan("plan is not a matching: block merged twice");
    }
    endpoint_used[e.a] = endpoint_used[e.b] = true;
    selected[k] = true;
  }

  // Matched pairs are disjoint, so each new block is one old block or the
  // union of exactly two.
  const std::size_t r = cliques.cliques.size();
  std::vector<std::size_t> rep(r);
  std::iota(rep.begin(), rep.end(), std::size_t{0});
  for (std::size_t k : plan.selected_edges) rep[tree.edges[k].b] = tree.edges[k].a;

  std::vector<std::size_t> new_index(r);
  std::vector<Clique> blocks;
  for (std::size_t i = 0; i < r; ++i) {
    if (rep[i] != i) continue;
    new_index[i] = blocks.size();
    blocks.push_back(cliques.cliques[i]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (rep[i] == i) continue;
    new_index[i] = new_index[rep[i]];
    Clique& target = blocks[new_index[i]];
    target = set_union(target, cliques.cliques[i]);
  }

  std::vector<TreeEdge> edges;
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    if (selected[k]) continue;
    const std::size_t a = new_index[tree.edges[k].a];
    const std::size_t b = new_index[tree.edges[k].b];
    edges.push_back({std::min(a, b), std::max(a, b), {}});
  }

  // Absorb blocks contained in a tree neighbor.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Clique& x = blocks[edges[k].a];
      const Clique& y = blocks[edges[k].b];
      const bool x_in_y = std::includes(y.begin(), y.end(), x.begin(), x.end());
      const bool y_in_x = std::includes(x.begin(), x.end(), y.begin(), y.end());
      if (!x_in_y && !y_in_x) continue;
      contract(blocks, edges, k);
      changed = true;
      break;
    }
  }

  for (TreeEdge& e : edges) {
    e.separator = set_intersection(blocks[e.a], blocks[e.b]);
  }
  MergedDecomposition out;
  out.cliques.node_count = cliques.node_count;
  out.cliques.cliques = std::move(blocks);
  out.tree.clique_count = out.cliques.cliques.size();
  out.tree.edges = std::move(edges);
  canonicalize(out.cliques, out.tree);
  return out;
}

MergeResult merge_rounds(const CliqueList& cliques, const CliqueTree& tree,
                         std::size_t max_block_size, std::size_t rounds,
                         Side side) {
  MergeResult result{cliques, tree, {}};
  for (std::size_t round = 1; round <= rounds; ++round) {
    const MergePlan plan = solve_merge(
        make_merge_model(result.cliques, result.tree, max_block_size, side));
    if (plan.empty()) break;
    MergedDecomposition merged =
        apply_merge(result.cliques, result.tree, plan);
    result.cliques = std::move(merged.cliques);
    result.tree = std::move(merged.tree);

    const DecompositionStats stats =
        decomposition_stats(result.cliques, result.tree, side, 0);
    RoundStats rs;
    rs.round = round;
    rs.merges = plan.selected_edges.size();
    rs.objective = plan.objective;
    rs.nc = stats.nc;
    rs.nlc = stats.nlc;
    rs.max_block_size = stats.max_clique_size;
    result.rounds.push_back(rs);
  }
  return result;
}

}  // namespace cliquedec
