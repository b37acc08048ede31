#include "cliquedec/graph.hpp"

#include <algorithm>
#include <list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace cliquedec {

namespace {

std::vector<NodeLabel> default_labels(std::size_t n) {
  std::vector<NodeLabel> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i].bus = static_cast<std::int64_t>(i);
  }
  return labels;
}

}  // namespace

SparsityGraph::SparsityGraph(std::size_t node_count)
    : adjacency_(node_count), labels_(default_labels(node_count)) {}

SparsityGraph::SparsityGraph(std::size_t node_count,
                             std::span<const Edge> edges,
                             std::vector<NodeLabel> labels)
    : adjacency_(node_count), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_ = default_labels(node_count);
  } else if (labels_.size() != node_count) {
    throw std::invalid_argument("label count does not match node count");
  }
  for (const Edge& e : edges) {
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop on node " +
                                  std::to_string(e.first));
    }
    if (e.second >= node_count) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.second) +
                                  " out of range");
    }
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool SparsityGraph::has_edge(Node u, Node v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> SparsityGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Node u = 0; u < adjacency_.size(); ++u) {
    for (Node v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SparsityGraph SparsityGraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return SparsityGraph(node_count(), all, labels_);
}

Ordering::Ordering(std::vector<Node> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (Node v : perm_) {
    if (v >= perm_.size() || seen[v]) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    seen[v] = true;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Node> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return Ordering(std::move(perm));
}

std::vector<std::size_t> Ordering::position() const {
  std::vector<std::size_t> pos(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) pos[perm_[k]] = k;
  return pos;
}

ChordalityResult is_chordal(const SparsityGraph& g) {
  const std::size_t n = g.node_count();
  // Partition refinement: cells ordered by decreasing label; the first cell
  // holds the unvisited nodes with the lexicographically largest label.
  struct Cell {
    std::set<Node> members;
    // Cell created in front of this one during the current step, if any.
    std::optional<std::list<Cell>::iterator> split;
  };
  std::list<Cell> cells;
  std::vector<std::list<Cell>::iterator> cell_of(n);
  if (n > 0) {
    Cell all;
    for (Node v = 0; v < n; ++v) all.members.insert(all.members.end(), v);
    cells.push_back(std::move(all));
    for (Node v = 0; v < n; ++v) cell_of[v] = cells.begin();
  }

  std::vector<bool> visited(n, false);
  std::vector<Node> visit_order;
  visit_order.reserve(n);
  std::vector<std::list<Cell>::iterator> touched;

  while (!cells.empty()) {
    auto first = cells.begin();
    const Node v = *first->members.begin();
    first->members.erase(first->members.begin());
    if (first->members.empty()) cells.erase(first);
    visited[v] = true;
    visit_order.push_back(v);

    touched.clear();
    for (Node w : g.neighbors(v)) {
      if (visited[w]) continue;
      auto cell = cell_of[w];
      if (!cell->split) {
        cell->split = cells.insert(cell, Cell{});
        touched.push_back(cell);
      }
      auto target = *cell->split;
      cell->members.erase(w);
      target->members.insert(w);
      cell_of[w] = target;
    }
    for (auto cell : touched) {
      cell->split.reset();
      if (cell->members.empty()) cells.erase(cell);
    }
  }

  std::vector<Node> reversed(visit_order.rbegin(), visit_order.rend());
  Ordering order(std::move(reversed));
  ChordalityResult result;
  result.chordal = verify_peo(g, order);
  if (result.chordal) result.peo = std::move(order);
  return result;
}

bool verify_peo(const SparsityGraph& g, const Ordering& order) {
  if (order.size() != g.node_count()) return false;
  const auto pos = order.position();
  for (Node v = 0; v < g.node_count(); ++v) {
    // Earliest later neighbor is the parent; the remaining later neighbors
    // must all be adjacent to it.
    Node parent = v;
    std::size_t parent_pos = order.size();
    for (Node w : g.neighbors(v)) {
      if (pos[w] > pos[v] && pos[w] < parent_pos) {
        parent = w;
        parent_pos = pos[w];
      }
    }
    if (parent == v) continue;
    for (Node w : g.neighbors(v)) {
      if (pos[w] > parent_pos && !g.has_edge(parent, w)) return false;
    }
  }
  return true;
}

std::vector<Node> induced_neighbors(const SparsityGraph& g, Node v,
                                    std::span<const Node> active) {
  std::vector<Node> sorted_active(active.begin(), active.end());
  std::sort(sorted_active.begin(), sorted_active.end());
  std::vector<Node> out;
  const auto nbrs = g.neighbors(v);
  std::set_intersection(nbrs.begin(), nbrs.end(), sorted_active.begin(),
                        sorted_active.end(), std::back_inserter(out));
  return out;
}

ChordalExtension::ChordalExtension(SparsityGraph base,
                                   std::vector<Edge> fill_edges, Ordering peo)
    : base_(std::move(base)), fill_(std::move(fill_edges)),
      peo_(std::move(peo)) {
  std::sort(fill_.begin(), fill_.end());
  if (std::adjacent_find(fill_.begin(), fill_.end()) != fill_.end()) {
    throw std::invalid_argument("duplicate fill edge");
  }
  for (const Edge& e : fill_) {
    if (base_.has_edge(e.first, e.second)) {
      throw std::invalid_argument("fill edge already in base graph");
    }
  }
  filled_ = base_.with_edges(fill_);
  if (!verify_peo(filled_, peo_)) {
    throw std::invalid_argument(
        "ordering is not a perfect elimination ordering of the extension");
  }
}

bool is_clique(const SparsityGraph& g, std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.has_edge(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

}  // namespace cliquedec
