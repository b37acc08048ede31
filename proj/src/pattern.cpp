#include "cliquedec/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cliquedec {

SparsityGraph build_complex_pattern(const NetworkTopology& topology) {
  validate(topology);
  std::unordered_map<BusId, Node> index;
  std::vector<NodeLabel> labels;
  labels.reserve(topology.buses.size());
  for (BusId bus : topology.buses) {
    index.emplace(bus, labels.size());
    labels.push_back({bus, VariablePart::kNone});
  }
  std::vector<Edge> edges;
  for (const Branch& br : topology.branches) {
    if (br.in_service) edges.emplace_back(index.at(br.from), index.at(br.to));
  }
  const std::size_t n = labels.size();
  return SparsityGraph(n, edges, std::move(labels));
}

SparsityGraph realify_graph(const SparsityGraph& complex_pattern) {
  std::vector<NodeLabel> labels;
  labels.reserve(2 * complex_pattern.node_count());
  for (const NodeLabel& label : complex_pattern.labels()) {
    if (label.part != VariablePart::kNone) {
      throw std::invalid_argument("pattern is already in real variables");
    }
    labels.push_back({label.bus, VariablePart::kRe});
    labels.push_back({label.bus, VariablePart::kIm});
  }
  std::vector<Edge> edges;
  edges.reserve(4 * complex_pattern.edge_count());
  for (const Edge& e : complex_pattern.edges()) {
    for (Node a : {re_index(e.first), im_index(e.first)}) {
      for (Node b : {re_index(e.second), im_index(e.second)}) {
        edges.emplace_back(a, b);
      }
    }
  }
  const std::size_t n = labels.size();
  return SparsityGraph(n, edges, std::move(labels));
}

std::vector<Node> realify_clique(std::span<const Node> clique) {
  std::vector<Node> out;
  out.reserve(2 * clique.size());
  for (Node n : clique) {
    out.push_back(re_index(n));
    out.push_back(im_index(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChordalExtension realify_extension(const ChordalExtension& complex_extension) {
  const SparsityGraph& filled = complex_extension.filled();
  SparsityGraph real_base = realify_graph(complex_extension.base());

  std::vector<Edge> fill;
  for (const Edge& e : realify_graph(filled).edges()) {
    if (!real_base.has_edge(e.first, e.second)) fill.push_back(e);
  }
  for (Node n = 0; n < filled.node_count(); ++n) {
    if (filled.degree(n) > 0) fill.emplace_back(re_index(n), im_index(n));
  }

  std::vector<Node> perm;
  perm.reserve(2 * filled.node_count());
  for (Node n : complex_extension.peo().perm()) {
    perm.push_back(re_index(n));
    perm.push_back(im_index(n));
  }
  try {
    return ChordalExtension(std::move(real_base), std::move(fill),
                            Ordering(std::move(perm)));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("realified extension invalid: ") +
                           e.what());
  }
}

}  // namespace cliquedec
